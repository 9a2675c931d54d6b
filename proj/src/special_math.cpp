#include "sts/special_math.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sts/errors.hpp"

namespace sts {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 1'000'000;

// erf series is used below this magnitude, the continued fraction above.
constexpr double kErfSwitch = 1.25;

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": non-finite argument");
    }
}

// Lentz evaluation of the Legendre continued fraction for Gamma(a, x):
//   Gamma(a, x) = e^{-x} x^a * h
// Converges quickly for x > a + 1.
double upper_gamma_fraction(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) return h;
    }
    throw DomainError("igamc: continued fraction did not converge");
}

// sum_{n>=0} x^n / ((a+1)(a+2)...(a+n)); P(a,x) = e^{-x} x^a / Gamma(a+1) * sum
double lower_gamma_series(double a, double x) {
    double ap = a;
    double term = 1.0;
    double sum = 1.0;
    for (int i = 0; i < kMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) return sum;
    }
    throw DomainError("igam: series did not converge");
}

// Positive-term series erf(x) = 2/sqrt(pi) e^{-x^2} sum 2^k x^{2k+1} / (2k+1)!!
// Every term is positive so there is no cancellation.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 0; k < 200; ++k) {
        term *= 2.0 * x2 / (2.0 * k + 3.0);
        sum += term;
        if (term < sum * kEps) break;
    }
    return 2.0 * std::numbers::inv_sqrtpi * std::exp(-x2) * sum;
}

// erfc for x >= kErfSwitch via Gamma(1/2, x^2) / sqrt(pi).
double erfc_fraction(double x) {
    const double x2 = x * x;
    const double scale = std::exp(-x2);
    if (scale == 0.0) return 0.0;
    return scale * x * upper_gamma_fraction(0.5, x2) * std::numbers::inv_sqrtpi;
}

void check_gamma_args(double a, double x, const char* fn) {
    require_finite(a, fn);
    require_finite(x, fn);
    if (a <= 0.0) throw DomainError(std::string(fn) + ": shape a must be > 0");
    if (x < 0.0) throw DomainError(std::string(fn) + ": x must be >= 0");
}

// log of e^{-x} x^a / Gamma(a)
double log_gamma_prefactor(double a, double x) {
    return a * std::log(x) - x - log_gamma(a);
}

}  // namespace

Probability Probability::checked(double value) {
    if (std::isnan(value)) throw DomainError("probability is NaN");
    if (value < 0.0) {
        if (value < -kProbabilitySlack) {
            throw DomainError("probability below 0: " + std::to_string(value));
        }
        value = 0.0;
    } else if (value > 1.0) {
        if (value > 1.0 + kProbabilitySlack) {
            throw DomainError("probability above 1: " + std::to_string(value));
        }
        value = 1.0;
    }
    return Probability(value);
}

double log_gamma(double a) {
    // Lanczos g = 7, n = 9.
    static constexpr std::array<double, 9> kCoef = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    require_finite(a, "log_gamma");
    if (a <= 0.0) throw DomainError("log_gamma: argument must be > 0");
    if (a < 0.5) {
        // Reflection: Gamma(a) Gamma(1-a) = pi / sin(pi a)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * a)) - log_gamma(1.0 - a);
    }
    const double z = a - 1.0;
    double series = kCoef[0];
    for (std::size_t i = 1; i < kCoef.size(); ++i) {
        series += kCoef[i] / (z + static_cast<double>(i));
    }
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

double erf(double x) {
    require_finite(x, "erf");
    const double ax = std::fabs(x);
    double r;
    if (ax < kErfSwitch) {
        r = erf_series(ax);
    } else {
        r = 1.0 - erfc_fraction(ax);
    }
    return x < 0.0 ? -r : r;
}

double erfc(double x) {
    require_finite(x, "erfc");
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x < kErfSwitch) return 1.0 - erf_series(x);
    return erfc_fraction(x);
}

Probability normal_cdf(double z) {
    require_finite(z, "normal_cdf");
    return Probability::checked(0.5 * erfc(-z * std::numbers::sqrt2 / 2.0));
}

Probability igam(double a, double x) {
    check_gamma_args(a, x, "igam");
    if (x == 0.0) return Probability::checked(0.0);
    if (x < a + 1.0) {
        const double lp = log_gamma_prefactor(a, x) - std::log(a);
        return Probability::checked(std::exp(lp) * lower_gamma_series(a, x));
    }
    return Probability::checked(1.0 - igamc(a, x));
}

Probability igamc(double a, double x) {
    check_gamma_args(a, x, "igamc");
    if (x == 0.0) return Probability::checked(1.0);
    if (x < a + 1.0) {
        return Probability::checked(1.0 - igam(a, x));
    }
    const double lp = log_gamma_prefactor(a, x);
    if (lp < -745.0) return Probability::checked(0.0);
    return Probability::checked(std::exp(lp) * upper_gamma_fraction(a, x));
}

}  // namespace sts
