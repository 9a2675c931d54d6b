#include "sts/generators.hpp"

#include <algorithm>
#include <string>

#include "sts/errors.hpp"

namespace sts {
namespace {

constexpr const char* kDefaultBbsP =
    "15642442584933029949503029164573487148725926790691125607344155017675391368419138139602186681194720665638370501217567059329379529947270998270839257173764787";
constexpr const char* kDefaultBbsQ =
    "16759759912428246374467531247757307659349207275740491722154451804652205037591933721002342872708629284612539822733107563567192353514933212433042061257617951";

void check_blum_prime(const mpz_class& v, const char* name) {
    if (v < 3 || mpz_probab_prime_p(v.get_mpz_t(), 30) == 0) {
        throw ConfigError(std::string("bbs.") + name + " is not prime");
    }
    if (mpz_fdiv_ui(v.get_mpz_t(), 4) != 3) {
        throw ConfigError(std::string("bbs.") + name + " is not congruent to 3 mod 4");
    }
}

void check_bbs_seed(const mpz_class& m, const mpz_class& x0) {
    if (x0 <= 1 || x0 >= m) throw ConfigError("bbs.x0 must satisfy 1 < x0 < p*q");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x0.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw ConfigError("bbs.x0 shares a factor with p*q");
}

}  // namespace

ParkMillerLcg::ParkMillerLcg(std::uint32_t seed) : state_(seed) {
    if (seed == 0 || seed >= kModulus) {
        throw ConfigError("pm.seed must lie in [1, 2^31 - 2]");
    }
}

BlumBlumShub::BlumBlumShub(const mpz_class& p, const mpz_class& q, const mpz_class& x0) {
    check_blum_prime(p, "p");
    check_blum_prime(q, "q");
    if (p == q) throw ConfigError("bbs.p and bbs.q must differ");
    m_ = p * q;
    check_bbs_seed(m_, x0);
    x_ = x0;
}

int BlumBlumShub::next_bit() {
    mpz_mul(scratch_.get_mpz_t(), x_.get_mpz_t(), x_.get_mpz_t());
    mpz_tdiv_r(x_.get_mpz_t(), scratch_.get_mpz_t(), m_.get_mpz_t());
    return mpz_odd_p(x_.get_mpz_t()) ? 1 : 0;
}

std::string_view to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::ParkMiller: return "pm";
        case GeneratorKind::Knuth: return "knuth";
        case GeneratorKind::Bbs: return "bbs";
    }
    return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
    if (name == "pm") return GeneratorKind::ParkMiller;
    if (name == "knuth") return GeneratorKind::Knuth;
    if (name == "bbs") return GeneratorKind::Bbs;
    throw ConfigError("unknown generator '" + std::string(name) + "' (expected pm, knuth or bbs)");
}

GeneratorSpec GeneratorSpec::default_bbs() {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::Bbs;
    spec.p = mpz_class(kDefaultBbsP);
    spec.q = mpz_class(kDefaultBbsQ);
    spec.x0 = 3;
    return spec;
}

void GeneratorSpec::validate() const {
    switch (kind) {
        case GeneratorKind::ParkMiller:
            if (seed == 0 || seed >= ParkMillerLcg::kModulus) {
                throw ConfigError("pm.seed must lie in [1, 2^31 - 2]");
            }
            if (pm_bits_per_word < 1 || pm_bits_per_word > ParkMillerLcg::kWordBits) {
                throw ConfigError("pm.bits_per_word must lie in [1, 31]");
            }
            break;
        case GeneratorKind::Knuth:
            if (knuth_bits_per_word < 1 || knuth_bits_per_word > KnuthLcg::kWordBits) {
                throw ConfigError("knuth.bits_per_word must lie in [1, 64]");
            }
            break;
        case GeneratorKind::Bbs: {
            check_blum_prime(p, "p");
            check_blum_prime(q, "q");
            if (p == q) throw ConfigError("bbs.p and bbs.q must differ");
            check_bbs_seed(p * q, x0);
            break;
        }
    }
}

GeneratorSpec GeneratorSpec::for_sequence(std::size_t k) const {
    GeneratorSpec out = *this;
    switch (kind) {
        case GeneratorKind::ParkMiller:
        case GeneratorKind::Knuth:
            out.seed = seed + k;
            break;
        case GeneratorKind::Bbs: {
            const mpz_class m = p * q;
            mpz_class base = x0 + static_cast<unsigned long>(k);
            out.x0 = (base * base) % m;
            break;
        }
    }
    return out;
}

BitSequence generate(const GeneratorSpec& spec, std::size_t n) {
    spec.validate();
    if (n == 0) throw ConfigError("bit count must be >= 1");
    BitWriter out(n);
    switch (spec.kind) {
        case GeneratorKind::ParkMiller: {
            ParkMillerLcg gen(static_cast<std::uint32_t>(spec.seed));
            const unsigned width = spec.pm_bits_per_word;
            while (out.size() < n) {
                const std::uint32_t word = gen.next() >> (ParkMillerLcg::kWordBits - width);
                const auto take = static_cast<unsigned>(std::min<std::size_t>(width, n - out.size()));
                out.push_bits(word >> (width - take), take);
            }
            break;
        }
        case GeneratorKind::Knuth: {
            KnuthLcg gen(spec.seed);
            const unsigned width = spec.knuth_bits_per_word;
            while (out.size() < n) {
                const std::uint64_t word = gen.next() >> (KnuthLcg::kWordBits - width);
                const auto take = static_cast<unsigned>(std::min<std::size_t>(width, n - out.size()));
                out.push_bits(word >> (width - take), take);
            }
            break;
        }
        case GeneratorKind::Bbs: {
            BlumBlumShub gen(spec.p, spec.q, spec.x0);
            for (std::size_t i = 0; i < n; ++i) out.push(gen.next_bit());
            break;
        }
    }
    return std::move(out).finish();
}

}  // namespace sts
