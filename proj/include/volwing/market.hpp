#pragma once

#include <cmath>

#include "volwing/errors.hpp"

namespace volwing {

/// Fixed market context of every pricing formula: spot, continuously
/// compounded rate and expiry. Immutable after construction.
struct MarketFrame {
    double x0;  ///< spot price, > 0
    double r;   ///< interest rate, >= 0
    double T;   ///< expiry in years, > 0

    MarketFrame(double spot, double rate, double expiry) : x0(spot), r(rate), T(expiry) {
        if (!(x0 > 0.0)) throw domain_error("MarketFrame: spot must be positive");
        if (!(r >= 0.0)) throw domain_error("MarketFrame: rate must be nonnegative");
        if (!(T > 0.0)) throw domain_error("MarketFrame: expiry must be positive");
    }

    /// Forward price x0 * e^{rT}.
    double forward() const { return x0 * std::exp(r * T); }
    /// log(x0 e^{rT}), used by everything that works in log-strike space.
    double log_forward() const { return std::log(x0) + r * T; }
    /// Discount factor e^{-rT}.
    double discount() const { return std::exp(-r * T); }
};

/// Strictly positive volatility.
struct Vol {
    double sigma;

    explicit Vol(double s) : sigma(s) {
        if (!(sigma > 0.0)) throw domain_error("Vol: sigma must be positive");
    }
};

}  // namespace volwing
