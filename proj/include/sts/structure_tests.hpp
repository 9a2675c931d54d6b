#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sts/bitstream.hpp"
#include "sts/test_result.hpp"

namespace sts {

/// Dense bit matrix with up to 64 columns; row r is a word whose
/// most significant used bit is column 0.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    int get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, int bit);

    std::uint64_t row(std::size_t r) const { return rows_.at(r); }
    /// Low `cols()` bits are used; column 0 is the highest of them.
    void set_row(std::size_t r, std::uint64_t bits);

    BitMatrix transposed() const;

private:
    std::vector<std::uint64_t> rows_;
    std::size_t cols_;
};

/// Rank over GF(2) by Gaussian elimination.
std::size_t gf2_rank(BitMatrix matrix);

struct RankCounts {
    std::size_t full = 0;       // rank M
    std::size_t minus_one = 0;  // rank M - 1
    std::size_t lower = 0;      // rank <= M - 2
    std::size_t total() const noexcept { return full + minus_one + lower; }
};

inline constexpr std::size_t kRankMatrixSide = 32;
inline constexpr double kRankProbabilities[3] = {0.2888, 0.5776, 0.1336};

/// Ranks of consecutive 32x32 matrices, filled row by row.
RankCounts count_matrix_ranks(const BitSequence& seq);

/// Test 5. Requires n >= 38912 (38 matrices).
TestResult matrix_rank_test(const BitSequence& seq);

struct DftOptions {
    bool log10_threshold = false;  // T = sqrt(log10(20) n) instead of ln
    bool quarter_variance = false; // n 0.95 0.05 / 4 instead of / 2
};

struct SpectralStats {
    double T;
    double N0;
    std::size_t N1;
    double d;
};

/// |F_j| for j = 0..n/2-1 of the +/-1 image of the sequence.
std::vector<double> dft_magnitudes(const BitSequence& seq);

/// Test 6. Odd n is rejected.
TestResult dft_test(const BitSequence& seq, const DftOptions& options = {});

}  // namespace sts
