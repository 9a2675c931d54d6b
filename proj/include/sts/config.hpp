#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sts/generators.hpp"
#include "sts/suite.hpp"
#include "sts/test_result.hpp"

namespace sts {

/// How tests 14 and 15 treat a walk with fewer than 500 cycles in a campaign.
enum class ExcursionGate {
    Score,   // compute P-values anyway
    Reject,  // inapplicable; pooled as P = 0
};

struct CampaignConfig {
    GeneratorSpec generator = GeneratorSpec::default_bbs();
    std::size_t m = 300;
    double alpha = 0.01;
    std::vector<TestId> tests;                // empty means none; defaults to all
    std::map<TestId, std::size_t> lengths;    // defaults to the used-length column
    SuiteParameters params;
    ExcursionGate excursion_gate = ExcursionGate::Score;
    unsigned jobs = 0;                        // 0 = pick automatically

    CampaignConfig();

    std::size_t length_for(TestId id) const;
    /// Longest prefix needed by the selected tests.
    std::size_t master_length() const;

    /// Throws ConfigError when the configuration cannot run.
    void validate() const;
};

/// Parses key=value lines; '#' starts a comment. Unknown keys, malformed
/// values and duplicate keys are ConfigErrors naming the line.
CampaignConfig parse_config(std::istream& in);
CampaignConfig parse_config_text(std::string_view text);

}  // namespace sts
