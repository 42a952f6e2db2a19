#pragma once

#include <cmath>
#include <limits>

#include "volwing/errors.hpp"

namespace volwing {

inline constexpr double sqrt_two = 1.4142135623730951;
inline constexpr double sqrt_two_pi = 2.5066282746310002;
inline constexpr double log_two = 0.6931471805599453;

/// Standard normal density.
inline double norm_pdf(double z) { return std::exp(-0.5 * z * z) / sqrt_two_pi; }

/// log of the standard normal density.
inline double log_norm_pdf(double z) { return -0.5 * z * z - std::log(sqrt_two_pi); }

/// Scaled complementary error function erfcx(x) = e^{x^2} erfc(x).
///
/// For x >= 5 the Laplace continued fraction is used; it stays accurate where
/// e^{x^2} overflows. Negative arguments go through the reflection
/// erfcx(-x) = 2 e^{x^2} - erfcx(x), which overflows near x = -26.6; callers
/// that need the far positive normal tail use the complement instead.
inline double erfcx(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) {
        // overflows for x < -26.6, as does e^{x^2} itself
        return 2.0 * std::exp(x * x) - erfcx(-x);
    }
    if (x < 5.0) return std::exp(x * x) * std::erfc(x);
    // Laplace continued fraction: sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    // evaluated backward; 40 levels is far beyond convergence for x >= 5.
    double cf = 0.0;
    for (int n = 40; n >= 1; --n) cf = (0.5 * n) / (x + cf);
    return (1.0 / (x + cf)) / 1.7724538509055160273;  // 1/sqrt(pi)
}

/// Standard normal cumulative distribution function, absolute error ~1e-16.
inline double norm_cdf(double z) {
    if (std::isnan(z)) throw domain_error("norm_cdf: argument must be finite");
    return 0.5 * std::erfc(-z / sqrt_two);
}

/// log N(z), stable over the whole line. In the left tail the quadratic term
/// is separated analytically so the result keeps full relative accuracy down
/// to z ~ -1e8 and beyond.
inline double log_norm_cdf(double z) {
    if (std::isnan(z)) throw domain_error("log_norm_cdf: argument must be finite");
    if (z > 0.0) {
        // N(z) = 1 - N(-z); N(-z) <= 1/2 so log1p is exact here
        return std::log1p(-0.5 * std::erfc(z / sqrt_two));
    }
    // N(z) = (1/2) e^{-z^2/2} erfcx(-z/sqrt(2))
    return -0.5 * z * z + std::log(0.5 * erfcx(-z / sqrt_two));
}

/// log(erfcx(-z/sqrt(2))), stable for all z. The deep-wing Black-Scholes
/// evaluation uses differences of this, after the analytic cancellation of
/// the quadratic terms.
inline double log_erfcx_neg_arg(double z) {
    const double x = -z / sqrt_two;
    if (x >= 0.0) return std::log(erfcx(x));
    // erfcx(x) = 2 e^{x^2} - erfcx(-x); written so it never overflows
    const double a = x * x;
    return a + log_two + std::log1p(-0.5 * erfcx(-x) * std::exp(-a));
}

}  // namespace volwing
