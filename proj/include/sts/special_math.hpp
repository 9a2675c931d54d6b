#pragma once

// P-value conversion kernel: error function, standard normal CDF and the
// regularized upper incomplete gamma function Q(a, x).
//
// All functions are pure and reentrant.

namespace sts {

/// A probability in [0, 1].
///
/// Construction through checked() clamps values that stray from the unit
/// interval by at most 1e-12 (rounding) and rejects anything further out.
class Probability {
public:
    constexpr Probability() = default;

    static Probability checked(double value);

    constexpr double value() const noexcept { return value_; }
    constexpr operator double() const noexcept { return value_; }

private:
    constexpr explicit Probability(double v) : value_(v) {}
    double value_ = 0.0;
};

inline constexpr double kProbabilitySlack = 1e-12;

/// Natural log of the gamma function for a > 0 (Lanczos approximation).
double log_gamma(double a);

double erf(double x);

/// 1 - erf(x), computed without cancellation for large x.
double erfc(double x);

/// Standard normal cumulative distribution Phi(z).
Probability normal_cdf(double z);

/// Regularized lower incomplete gamma P(a, x).
Probability igam(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
///
/// Uses the power series for x < a + 1 and a Lentz continued fraction
/// otherwise. Throws DomainError for a <= 0, x < 0 or non-finite input.
Probability igamc(double a, double x);

}  // namespace sts
