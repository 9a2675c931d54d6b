// Acceptance run: one PASS/FAIL line per criterion, thresholds fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sts/campaign.hpp"
#include "sts/config.hpp"
#include "sts/entropy_complexity_tests.hpp"
#include "sts/frequency_tests.hpp"
#include "sts/special_math.hpp"
#include "sts/structure_tests.hpp"
#include "sts/suite.hpp"
#include "sts/template_tests.hpp"
#include "sts/walk_tests.hpp"

namespace {

constexpr double kSpecialTol = 1e-10;
constexpr double kIdentityTol = 1e-10;
constexpr double kSerialTol = 1e-10;
constexpr double kDftTol = 1e-6;
constexpr double kDesignedPass = 0.9;
constexpr double kDesignedFail = 1e-6;
constexpr std::size_t kCampaignM = 100;
constexpr double kCampaignAlpha = 0.01;
constexpr int kMaxFailingTests = 1;
constexpr double kPopCutoff = 1e-4;
constexpr int kUniformReps = 100;
constexpr int kUniformNeeded = 99;

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail = what;
            ok = false;
        }
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

int failures = 0;

void report(const char* id, const char* title, const Check& c, double seconds, const std::string& note = "") {
    std::printf("%s %s  %s  (%.1f s)%s%s\n", id, c.ok ? "PASS" : "FAIL", title, seconds,
                c.ok ? "" : "  first failure: ", c.ok ? "" : c.detail.c_str());
    if (!note.empty()) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
}

template <class F>
void criterion(const char* id, const char* title, F body) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    std::string note;
    try {
        note = body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, title, c, s, note);
}

std::string repeat(const std::string& unit, std::size_t times) {
    std::string s;
    for (std::size_t i = 0; i < times; ++i) s += unit;
    return s;
}

double first_p(sts::TestId id, const sts::BitSequence& s) {
    return sts::run_test(id, s, sts::SuiteParameters{}).p_values[0];
}

double min_p(const sts::TestResult& r) {
    double m = 1.0;
    for (const auto& p : r.p_values) m = std::min(m, p.value());
    return m;
}

std::string verdict_summary(const sts::CampaignReport& r) {
    std::string s;
    for (const auto& t : r.tests) {
        s += std::to_string(sts::to_int(t.id)) + ":" + fmt("%.4f", t.verdict.observed_proportion) +
             (t.verdict.proportion_success ? "" : "*") + " ";
    }
    return s;
}

sts::CampaignReport ac6_report;

}  // namespace

int main() {
    std::printf("Acceptance criteria\n");

    criterion("AC1", "threshold exactness", [](Check& c) {
        c.require(fmt("%.6f", sts::threshold(0.01, 300)) == "0.972766", "threshold(0.01, 300)");
        c.require(fmt("%.6f", sts::threshold(0.01, 2400)) == "0.983907", "threshold(0.01, 2400)");
        c.require(fmt("%.6f", sts::threshold(0.01, 5400)) == "0.985938", "threshold(0.01, 5400)");
        return std::string();
    });

    criterion("AC2", "special-function accuracy", [](Check& c) {
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> xs(-3.0, 3.0);
        for (int i = 0; i < 2000; ++i) {
            const double x = xs(rng);
            c.require(oracle::rel_err(sts::erf(x), oracle::erf_series(x)) < kSpecialTol, "erf " + fmt("%g", x));
            c.require(oracle::rel_err(sts::erfc(x), 1 - oracle::erf_series(x)) < kSpecialTol, "erfc " + fmt("%g", x));
        }
        for (double z = -8; z <= 8; z += 0.0625) {
            c.require(oracle::rel_err(sts::normal_cdf(z), oracle::normal_cdf(z)) < kSpecialTol, "Phi " + fmt("%g", z));
        }
        std::uniform_real_distribution<double> la(std::log(0.5), std::log(200.0)), lx(std::log(0.01), std::log(400.0));
        for (int i = 0; i < 2000; ++i) {
            const double a = std::exp(la(rng)), x = std::exp(lx(rng));
            const double want = oracle::igamc(a, x);
            if (want < 1e-280) continue;
            c.require(oracle::rel_err(sts::igamc(a, x), want) < kSpecialTol, "igamc " + fmt("%g", a) + fmt(",%g", x));
        }
        std::uniform_real_distribution<double> pts(0.0, 50.0);
        for (int i = 0; i < 1000; ++i) {
            const double x = pts(rng);
            c.require(oracle::rel_err(sts::igamc(1, x), std::exp(-x)) < kIdentityTol, "Q(1,x) " + fmt("%g", x));
            c.require(oracle::rel_err(sts::igamc(0.5, x), std::erfc(std::sqrt(x))) < kIdentityTol,
                      "Q(1/2,x) " + fmt("%g", x));
        }
        return std::string();
    });

    criterion("AC3", "serial m=1 equals monobit", [](Check& c) {
        std::mt19937_64 rng(3);
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            const auto s = oracle::seq(oracle::random_bits(rng, 128));
            const double d = std::fabs(sts::serial_test(s, 1).p_values[0] - sts::monobit(s).p_values[0]);
            worst = std::max(worst, d);
            c.require(d <= kSerialTol, "sequence " + std::to_string(i));
        }
        return "max |difference| = " + fmt("%.3e", worst);
    });

    criterion("AC4", "oracle equivalence on small instances", [](Check& c) {
        std::mt19937_64 rng(4);
        for (int i = 0; i < 500; ++i) {  // (a)
            const std::size_t r = 1 + rng() % 8, k = 1 + rng() % 8;
            sts::BitMatrix m(r, k);
            std::vector<std::uint64_t> rows;
            for (std::size_t j = 0; j < r; ++j) {
                m.set_row(j, rng());
                rows.push_back(m.row(j));
            }
            c.require(sts::gf2_rank(m) == oracle::span_rank(rows), "(a) matrix " + std::to_string(i));
        }
        for (int i = 0; i < 200; ++i) {  // (b)
            const auto bits = oracle::random_bits(rng, 16);
            c.require(sts::berlekamp_massey(oracle::seq(bits)) == oracle::minimal_lfsr(bits), "(b) block " + bits);
        }
        for (int i = 0; i < 500; ++i) {  // (c)
            const auto bits = oracle::random_bits(rng, 1 + rng() % 64);
            const auto pat = oracle::random_bits(rng, 1 + rng() % 4);
            const auto s = oracle::seq(bits);
            c.require(sts::count_non_overlapping(s, 0, bits.size(), sts::Template::parse(pat)) ==
                          oracle::count_non_overlapping(bits, pat),
                      "(c) non-overlapping " + bits);
            const unsigned m = 1 + rng() % 5;
            c.require(sts::count_overlapping_ones(s, 0, bits.size(), m) ==
                          oracle::count_overlapping(bits, std::string(m, '1')),
                      "(c) overlapping " + bits);
        }
        {  // (d)
            const auto bits = oracle::random_bits(rng, 256);
            const auto got = sts::dft_magnitudes(oracle::seq(bits));
            const auto want = oracle::dft_magnitudes(bits);
            for (std::size_t j = 0; j < got.size(); ++j) {
                c.require(std::fabs(got[j] - want[j]) <= kDftTol * std::max(1.0, want[j]), "(d) bin " + std::to_string(j));
            }
        }
        for (int i = 0; i < 200; ++i) {  // (e)
            const auto bits = oracle::random_bits(rng, 32);
            const auto walk = sts::build_walk(oracle::seq(bits));
            const auto want = oracle::walk_recount(bits);
            const auto nu = sts::excursion_counts(walk);
            const auto xi = sts::state_visits(walk);
            c.require(walk.J == want.J, "(e) J " + bits);
            for (std::size_t k = 0; k < sts::kExcursionStates.size(); ++k) {
                for (std::size_t v = 0; v < 6; ++v) {
                    c.require(nu[k][v] == want.nu.at(sts::kExcursionStates[k])[v], "(e) nu " + bits);
                }
            }
            for (std::size_t k = 0; k < sts::kVariantStates.size(); ++k) {
                c.require(xi[k] == want.xi.at(sts::kVariantStates[k]), "(e) xi " + bits);
            }
        }
        return std::string();
    });

    criterion("AC5", "designed-input verdicts", [](Check& c) {
        using sts::TestId;
        const auto alt = oracle::seq(repeat("01", 5000));
        for (auto id : {TestId::Frequency, TestId::BlockFrequency, TestId::CumulativeSums}) {
            const auto r = sts::run_test(id, alt, {});
            c.require(min_p(r) > kDesignedPass, "alternating should pass test " + std::to_string(sts::to_int(id)));
        }
        for (auto id : {TestId::Runs, TestId::Serial, TestId::ApproximateEntropy}) {
            const auto r = sts::run_test(id, alt, {});
            c.require(r.p_values[0] < kDesignedFail, "alternating should fail test " + std::to_string(sts::to_int(id)));
        }
        const auto ones = oracle::seq(std::string(40000, '1'));
        for (auto id : {TestId::Frequency, TestId::BlockFrequency, TestId::LongestRun, TestId::MatrixRank}) {
            c.require(first_p(id, ones) < kDesignedFail, "constant should fail test " + std::to_string(sts::to_int(id)));
        }
        c.require(!sts::run_test(TestId::Runs, ones, {}).applicable, "constant should trip the runs gate");
        return std::string();
    });

    criterion("AC6", "desk-scale BBS campaign", [](Check& c) {
        sts::CampaignConfig config;
        config.m = kCampaignM;
        config.alpha = kCampaignAlpha;
        ac6_report = sts::run_campaign(config);
        int below = 0;
        std::string which;
        for (const auto& t : ac6_report.tests) {
            if (t.verdict.observed_proportion < sts::threshold(kCampaignAlpha, t.pvalues.size())) {
                ++below;
                which += " " + std::to_string(sts::to_int(t.id));
            }
        }
        c.require(below <= kMaxFailingTests, std::to_string(below) + " tests below threshold:" + which);
        return "observed proportions (* = below threshold): " + verdict_summary(ac6_report);
    });

    criterion("AC7", "Knuth LCG discriminated by tests 11, 14, 15", [](Check& c) {
        auto config = sts::parse_config_text("generator = knuth\nknuth.bits_per_word = 32\ntests = 11,14,15\n");
        config.m = kCampaignM;
        config.alpha = kCampaignAlpha;
        const auto r = sts::run_campaign(config);
        bool flagged = false;
        std::string pops;
        for (const auto& t : r.tests) {
            const bool low_pop = t.verdict.pop && t.verdict.pop->value() < kPopCutoff;
            flagged |= !t.verdict.proportion_success || low_pop;
            pops += std::to_string(sts::to_int(t.id)) + ":" +
                    (t.verdict.pop ? sts::format_scientific(*t.verdict.pop) : std::string("n/a")) + " ";
        }
        c.require(flagged, "no proportion or uniformity failure among tests 11, 14, 15");
        return "proportions: " + verdict_summary(r) + "| POP " + pops;
    });

    criterion("AC8", "report fidelity", [](Check& c) {
        const std::string text = sts::render_report(ac6_report, sts::ReportFormat::Tsv);
        std::istringstream in(text);
        std::string line;
        std::getline(in, line);
        c.require(line == "Test\t0-.01\t.01-.1\t.1-.2\t.2-.3\t.3-.4\t.4-.5\t.5-.6\t.6-.7\t.7-.8\t.8-.9\t.9-1",
                  "histogram header");
        std::size_t rows = 0;
        while (std::getline(in, line) && !line.empty()) {
            std::istringstream cells(line);
            std::string cell;
            std::getline(cells, cell, '\t');
            const auto id = sts::test_id_from_int(std::stoi(cell));
            std::size_t sum = 0, columns = 0;
            while (std::getline(cells, cell, '\t')) {
                sum += std::stoul(cell);
                ++columns;
            }
            c.require(columns == 11, "11 histogram columns");
            c.require(sum == ac6_report.m * sts::test_info(id).arity, "row sum for test " + std::to_string(sts::to_int(id)));
            ++rows;
        }
        c.require(rows == ac6_report.tests.size(), "one histogram row per test");
        std::getline(in, line);
        c.require(line == "Test\tExpected Proportion\tObserved Proportion\tStatus for Proportion of passing\t"
                          "P-value of P-values\tStatus for Uniform/Non-uniform distribution",
                  "verdict header");
        const std::regex row(R"(\d+\t\d\.\d{6}\t\d\.\d{6}\t(Success|Unsuccess)\t\d\.\d{6}e[+-]\d{2,3}\t(Uniform|Non-uniform))");
        std::size_t verdicts = 0;
        while (std::getline(in, line)) {
            c.require(std::regex_match(line, row), "verdict row: " + line);
            ++verdicts;
        }
        c.require(verdicts == ac6_report.tests.size(), "one verdict row per test");
        c.require(sts::format_scientific(0.9157321) == "9.157321e-01", "POP rendering");
        return std::string();
    });

    criterion("AC9", "uniformity machinery", [](Check& c) {
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        int uniform = 0;
        for (int rep = 0; rep < kUniformReps; ++rep) {
            std::vector<sts::Probability> v;
            for (int i = 0; i < 300; ++i) v.push_back(sts::Probability::checked(u(rng)));
            uniform += sts::pop_uniformity(v).uniform;
        }
        c.require(uniform >= kUniformNeeded, std::to_string(uniform) + " of 100 uniform");
        const std::vector<sts::Probability> flat(300, sts::Probability::checked(0.5));
        c.require(!sts::pop_uniformity(flat).uniform, "300 copies of 0.5 judged uniform");
        return std::to_string(uniform) + " of " + std::to_string(kUniformReps) + " uniform draws judged Uniform";
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
