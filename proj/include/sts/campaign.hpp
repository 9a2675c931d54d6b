#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sts/config.hpp"
#include "sts/special_math.hpp"
#include "sts/test_result.hpp"

namespace sts {

/// Minimum pass proportion (1 - alpha) - 3 sqrt(alpha (1 - alpha) / count).
/// Requires 0 < alpha < 1 and count >= 1/alpha; throws ConfigError otherwise.
double threshold(double alpha, std::size_t sample_count);

struct ProportionResult {
    double observed;
    double expected;
    bool success;
};

/// Fraction of P-values >= alpha, judged against threshold(alpha, size).
ProportionResult proportion(const std::vector<Probability>& pvalues, double alpha);

inline constexpr std::size_t kMinPopSamples = 55;
inline constexpr double kUniformityCutoff = 0.0001;

struct UniformityResult {
    Probability pop;
    bool uniform;
};

/// Ten-decile chi-square uniformity P-value. Needs >= 55 values.
UniformityResult pop_uniformity(const std::vector<Probability>& pvalues);

struct PValueBins {
    std::array<std::size_t, 11> appendix{};  // [0,.01) [.01,.1) [.1,.2) ... [.9,1]
    std::array<std::size_t, 10> deciles{};

    void add(double p);
    std::size_t total() const noexcept;
};

std::size_t appendix_bin(double p);
std::size_t decile_bin(double p);

struct TestVerdict {
    double expected_proportion;
    double observed_proportion;
    bool proportion_success;
    std::optional<Probability> pop;  // absent below kMinPopSamples values
    bool uniform = false;
};

struct TestSummary {
    TestId id;
    std::vector<Probability> pvalues;  // pooled, in sequence order
    std::size_t inapplicable = 0;      // results pooled as P = 0
    PValueBins bins;
    TestVerdict verdict;
};

/// Bins and verdicts for one test's pooled P-values.
TestSummary summarize(TestId id, std::vector<Probability> pvalues, double alpha, std::size_t inapplicable = 0);

struct CampaignReport {
    double alpha = 0.01;
    std::size_t m = 0;
    std::vector<TestSummary> tests;
};

/// Called after each finished sequence with (done, total).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Runs the campaign; `jobs` = 0 uses config.jobs, then hardware concurrency.
/// The report does not depend on the worker count.
CampaignReport run_campaign(const CampaignConfig& config, unsigned jobs = 0, const ProgressFn& progress = {});

/// Rebuilds a report from pooled P-values (as written by write_pvalues).
CampaignReport report_from_pvalues(const std::map<TestId, std::vector<Probability>>& pvalues, double alpha);

enum class ReportFormat { Tsv, Text };

/// Histogram table, blank line, verdict table.
std::string render_report(const CampaignReport& report, ReportFormat format);

/// test,bin_lo,bin_hi,count
void write_histogram_csv(const CampaignReport& report, std::ostream& out);

/// "test<TAB>p" lines, one per pooled P-value, P in %.17g.
void write_pvalues(const CampaignReport& report, std::ostream& out);
std::map<TestId, std::vector<Probability>> read_pvalues(std::istream& in);

std::string format_scientific(double v);  // "%.6e"
std::string format_fixed(double v);       // "%.6f"

}  // namespace sts
