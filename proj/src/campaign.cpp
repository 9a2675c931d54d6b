#include "sts/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "sts/errors.hpp"
#include "sts/generators.hpp"
#include "sts/suite.hpp"

namespace sts {
namespace {

struct Outcome {
    std::vector<Probability> pvalues;
    bool applicable = true;
};

}  // namespace

double threshold(double alpha, std::size_t sample_count) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
    if (static_cast<double>(sample_count) * alpha < 1.0 - 1e-9) {
        throw ConfigError("sample count " + std::to_string(sample_count) + " is below 1/alpha");
    }
    return (1.0 - alpha) - 3.0 * std::sqrt(alpha * (1.0 - alpha) / static_cast<double>(sample_count));
}

ProportionResult proportion(const std::vector<Probability>& pvalues, double alpha) {
    if (pvalues.empty()) throw DomainError("no P-values");
    const auto passed = std::count_if(pvalues.begin(), pvalues.end(), [&](Probability p) { return p >= alpha; });
    ProportionResult r;
    r.observed = static_cast<double>(passed) / static_cast<double>(pvalues.size());
    r.expected = threshold(alpha, pvalues.size());
    r.success = r.observed >= r.expected;
    return r;
}

std::size_t appendix_bin(double p) {
    if (p < 0.01) return 0;
    if (p < 0.1) return 1;
    return std::min<std::size_t>(static_cast<std::size_t>(p * 10.0), 9) + 1;
}

std::size_t decile_bin(double p) { return std::min<std::size_t>(static_cast<std::size_t>(p * 10.0), 9); }

void PValueBins::add(double p) {
    ++appendix[appendix_bin(p)];
    ++deciles[decile_bin(p)];
}

std::size_t PValueBins::total() const noexcept {
    std::size_t t = 0;
    for (auto c : appendix) t += c;
    return t;
}

UniformityResult pop_uniformity(const std::vector<Probability>& pvalues) {
    if (pvalues.size() < kMinPopSamples) {
        throw DomainError("uniformity check needs at least 55 P-values");
    }
    std::array<std::size_t, 10> bins{};
    for (auto p : pvalues) ++bins[decile_bin(p)];
    const double expected = static_cast<double>(pvalues.size()) / 10.0;
    double chi2 = 0.0;
    for (auto c : bins) chi2 += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
    const Probability pop = igamc(4.5, chi2 / 2.0);
    return {pop, pop >= kUniformityCutoff};
}

TestSummary summarize(TestId id, std::vector<Probability> pvalues, double alpha, std::size_t inapplicable) {
    TestSummary s;
    s.id = id;
    s.inapplicable = inapplicable;
    for (auto p : pvalues) s.bins.add(p);
    const ProportionResult prop = proportion(pvalues, alpha);
    s.verdict.expected_proportion = prop.expected;
    s.verdict.observed_proportion = prop.observed;
    s.verdict.proportion_success = prop.success;
    if (pvalues.size() >= kMinPopSamples) {
        const UniformityResult u = pop_uniformity(pvalues);
        s.verdict.pop = u.pop;
        s.verdict.uniform = u.uniform;
    }
    s.pvalues = std::move(pvalues);
    return s;
}

CampaignReport run_campaign(const CampaignConfig& config, unsigned jobs, const ProgressFn& progress) {
    config.validate();
    SuiteParameters params = config.params;
    params.excursions.enforce_gate = config.excursion_gate == ExcursionGate::Reject;

    const std::size_t m = config.m;
    const std::size_t n_master = config.master_length();
    std::vector<std::vector<Outcome>> outcomes(m);

    unsigned workers = jobs != 0 ? jobs : config.jobs;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(m, 1)));

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex mu;
    std::exception_ptr failure;
    std::size_t failed_index = 0;
    std::atomic<bool> stop{false};

    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= m || stop.load()) return;
            try {
                if (!config.tests.empty()) {
                    const BitSequence master = generate(config.generator.for_sequence(k), n_master);
                    auto& row = outcomes[k];
                    for (TestId id : config.tests) {
                        const std::size_t n = config.length_for(id);
                        const TestResult r =
                            n == master.size() ? run_test(id, master, params) : run_test(id, master.prefix(n), params);
                        row.push_back({r.p_values, r.applicable});
                    }
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure || k < failed_index) {
                    failure = std::current_exception();
                    failed_index = k;
                }
                stop = true;
                return;
            }
            const std::size_t d = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard lock(mu);
                progress(d, m);
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) {
        try {
            std::rethrow_exception(failure);
        } catch (const std::exception& e) {
            throw Error("sequence " + std::to_string(failed_index) + ": " + e.what());
        }
    }

    CampaignReport report;
    report.alpha = config.alpha;
    report.m = m;
    for (std::size_t t = 0; t < config.tests.size(); ++t) {
        std::vector<Probability> pooled;
        pooled.reserve(m * test_info(config.tests[t]).arity);
        std::size_t inapplicable = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const Outcome& o = outcomes[k][t];
            if (!o.applicable) ++inapplicable;
            pooled.insert(pooled.end(), o.pvalues.begin(), o.pvalues.end());
        }
        report.tests.push_back(summarize(config.tests[t], std::move(pooled), config.alpha, inapplicable));
    }
    return report;
}

CampaignReport report_from_pvalues(const std::map<TestId, std::vector<Probability>>& pvalues, double alpha) {
    CampaignReport report;
    report.alpha = alpha;
    for (const auto& [id, values] : pvalues) {
        const std::size_t arity = test_info(id).arity;
        if (values.size() % arity != 0) {
            throw ConfigError("test " + std::to_string(to_int(id)) + " has " + std::to_string(values.size()) +
                              " P-values, not a multiple of " + std::to_string(arity));
        }
        report.m = std::max(report.m, values.size() / arity);
        report.tests.push_back(summarize(id, values, alpha));
    }
    return report;
}

}  // namespace sts
