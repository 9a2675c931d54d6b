#include "sts/suite.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sts/entropy_complexity_tests.hpp"
#include "sts/errors.hpp"
#include "sts/frequency_tests.hpp"

namespace sts {
namespace {

int parse_int(const std::string& s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw ConfigError("invalid test number '" + s + "'");
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

TestResult run_test(TestId id, const BitSequence& seq, const SuiteParameters& p) {
    TestResult r;
    switch (id) {
        case TestId::Frequency: r = monobit(seq); break;
        case TestId::BlockFrequency: r = block_frequency(seq, p.block_frequency_m); break;
        case TestId::Runs: r = runs(seq); break;
        case TestId::LongestRun: r = longest_run(seq); break;
        case TestId::MatrixRank: r = matrix_rank_test(seq); break;
        case TestId::Spectral: r = dft_test(seq, p.dft); break;
        case TestId::NonOverlappingTemplate:
            r = non_overlapping_template(seq, p.nonoverlapping_template, p.nonoverlapping_blocks);
            break;
        case TestId::OverlappingTemplate:
            r = overlapping_template(seq, p.overlapping_m, p.overlapping_block);
            break;
        case TestId::Universal: r = universal_test(seq, p.universal_l); break;
        case TestId::LinearComplexity: r = linear_complexity_test(seq, p.linear_complexity_m); break;
        case TestId::Serial: r = serial_test(seq, p.serial_m); break;
        case TestId::ApproximateEntropy: r = approximate_entropy_test(seq, p.apen_m); break;
        case TestId::CumulativeSums: r = cumulative_sums_test(seq); break;
        case TestId::RandomExcursions: r = random_excursions_test(seq, p.excursions); break;
        case TestId::RandomExcursionsVariant: r = random_excursions_variant_test(seq, p.excursions); break;
    }
    r.check_invariants();
    return r;
}

std::vector<TestId> parse_test_selection(const std::string& text) {
    const std::string all = trim(text);
    std::vector<TestId> out;
    if (all == "all") {
        for (const auto& t : all_tests()) out.push_back(t.id);
        return out;
    }
    if (all.empty()) return out;
    std::stringstream ss(all);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("empty entry in test list '" + text + "'");
        const auto dash = item.find('-');
        int lo, hi;
        if (dash == std::string::npos) {
            lo = hi = parse_int(item);
        } else {
            lo = parse_int(trim(item.substr(0, dash)));
            hi = parse_int(trim(item.substr(dash + 1)));
            if (lo > hi) throw ConfigError("descending range '" + item + "'");
        }
        for (int v = lo; v <= hi; ++v) out.push_back(test_id_from_int(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sts
