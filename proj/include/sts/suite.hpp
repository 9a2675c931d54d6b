#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sts/bitstream.hpp"
#include "sts/structure_tests.hpp"
#include "sts/template_tests.hpp"
#include "sts/test_result.hpp"
#include "sts/walk_tests.hpp"

namespace sts {

/// Tunable parameters for every test; defaults match the battery's conventions.
struct SuiteParameters {
    std::optional<std::size_t> block_frequency_m;
    Template nonoverlapping_template = Template::parse(kDefaultTemplate);
    std::size_t nonoverlapping_blocks = 8;
    unsigned overlapping_m = 9;
    std::size_t overlapping_block = 1032;
    std::optional<unsigned> universal_l;
    std::size_t linear_complexity_m = 500;
    std::optional<unsigned> serial_m;
    unsigned apen_m = 2;
    DftOptions dft;
    ExcursionOptions excursions;
};

/// Runs one test on the whole sequence. Library errors propagate.
TestResult run_test(TestId id, const BitSequence& seq, const SuiteParameters& params = {});

/// Parses "all" or a comma-separated list of numbers 1..15 (ranges "a-b" allowed).
/// Returns ids in ascending order without duplicates. Throws ConfigError.
std::vector<TestId> parse_test_selection(const std::string& text);

}  // namespace sts
