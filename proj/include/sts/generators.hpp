#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sts/bitstream.hpp"

namespace sts {

/// Park-Miller "minimal standard" multiplicative LCG: x' = 16807 x mod (2^31 - 1).
class ParkMillerLcg {
public:
    static constexpr std::uint32_t kModulus = 2147483647u;
    static constexpr std::uint32_t kMultiplier = 16807u;
    static constexpr unsigned kWordBits = 31;

    /// seed must lie in [1, 2^31 - 2]; throws ConfigError otherwise.
    explicit ParkMillerLcg(std::uint32_t seed);

    static constexpr std::uint32_t step(std::uint32_t x) noexcept {
        return static_cast<std::uint32_t>((std::uint64_t{kMultiplier} * x) % kModulus);
    }

    /// Advances and returns the new state, which is also the output word.
    std::uint32_t next() noexcept { return state_ = step(state_); }
    std::uint32_t state() const noexcept { return state_; }

private:
    std::uint32_t state_;
};

/// 64-bit mixed LCG with Knuth's MMIX constants: x' = a x + c mod 2^64.
class KnuthLcg {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ull;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ull;
    static constexpr unsigned kWordBits = 64;

    explicit KnuthLcg(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr std::uint64_t step(std::uint64_t x) noexcept {
        return kMultiplier * x + kIncrement;
    }

    std::uint64_t next() noexcept { return state_ = step(state_); }
    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Blum-Blum-Shub: x' = x^2 mod pq, output the least significant bit of x'.
class BlumBlumShub {
public:
    /// Validates p, q prime, p != q, p = q = 3 (mod 4), 1 < x0 < pq and
    /// gcd(x0, pq) = 1. Throws ConfigError.
    BlumBlumShub(const mpz_class& p, const mpz_class& q, const mpz_class& x0);

    int next_bit();
    const mpz_class& state() const noexcept { return x_; }
    const mpz_class& modulus() const noexcept { return m_; }

private:
    mpz_class m_;
    mpz_class x_;
    mpz_class scratch_;
};

enum class GeneratorKind { ParkMiller, Knuth, Bbs };

std::string_view to_string(GeneratorKind kind);
/// Accepts "pm", "knuth" or "bbs". Throws ConfigError.
GeneratorKind parse_generator_kind(std::string_view name);

/// Seed parameters plus output-bit extraction for one generator.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Bbs;
    std::uint64_t seed = 1;          // pm / knuth
    mpz_class p, q, x0;              // bbs
    unsigned pm_bits_per_word = 8;
    unsigned knuth_bits_per_word = 32;

    /// Default BBS parameters: two 513-bit primes congruent to 3 mod 4.
    static GeneratorSpec default_bbs();

    /// Throws ConfigError when the parameters are unusable.
    void validate() const;

    /// Parameters for the k-th sequence of a campaign: seed + k for the
    /// LCGs, x0 = (x0 + k)^2 mod pq for BBS.
    GeneratorSpec for_sequence(std::size_t k) const;
};

/// Deterministic n-bit output. LCG words contribute their top
/// `*_bits_per_word` bits, MSB-first; BBS contributes one bit per squaring.
BitSequence generate(const GeneratorSpec& spec, std::size_t n);

}  // namespace sts
