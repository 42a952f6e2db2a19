#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "volwing/errors.hpp"
#include "volwing/market.hpp"
#include "volwing/normal.hpp"

namespace volwing {

/// Black-Scholes pricing and robust implied-volatility inversion.
///
/// Everything below works in log-price / log-strike coordinates so that
/// strikes like e^{100} and prices like 1e-200 keep full relative accuracy.
/// The trick is that in log N(d1) - log N(d2) the quadratic terms cancel
/// analytically (d1^2 - d2^2 = -2k), so the deep-wing time value reduces to a
/// ratio of scaled complementary error functions, which is well conditioned.

namespace detail {

struct BsGeometry {
    double s;   // sigma * sqrt(T)
    double k;   // log(K / forward)
    double d1;
    double d2;
};

inline BsGeometry bs_geometry(const MarketFrame& frame, double log_strike, double sigma) {
    BsGeometry g;
    g.s = sigma * std::sqrt(frame.T);
    g.k = log_strike - frame.log_forward();
    g.d1 = -g.k / g.s + 0.5 * g.s;
    g.d2 = g.d1 - g.s;
    return g;
}

/// log of the normalized OTM call value N(d1) - e^k N(d2), for k >= 0.
inline double log_call_norm(const BsGeometry& g) {
    // B - A = log erfcx(-d2/sqrt2) - log erfcx(-d1/sqrt2)  (quadratics cancel)
    const double delta = log_erfcx_neg_arg(g.d2) - log_erfcx_neg_arg(g.d1);
    const double a = log_norm_cdf(g.d1);
    return a + std::log(-std::expm1(delta));
}

/// log of the normalized OTM put value e^k N(-d2) - N(-d1), for k <= 0.
inline double log_put_norm(const BsGeometry& g) {
    const double delta = log_erfcx_neg_arg(-g.d1) - log_erfcx_neg_arg(-g.d2);
    const double a = g.k + log_norm_cdf(-g.d2);
    return a + std::log(-std::expm1(delta));
}

}  // namespace detail

/// log Black-Scholes call price; exact analytic cancellation in the right
/// wing, parity in the left wing (where the call is O(x0) anyway).
inline double log_bs_call_price(const MarketFrame& frame, double log_strike, Vol vol) {
    const auto g = detail::bs_geometry(frame, log_strike, vol.sigma);
    const double log_disc_fwd = -frame.r * frame.T + frame.log_forward();  // log x0
    if (g.k >= 0.0) return log_disc_fwd + detail::log_call_norm(g);
    const double put = std::exp(log_disc_fwd + detail::log_put_norm(g));
    const double intrinsic = frame.x0 - std::exp(log_strike) * frame.discount();
    return std::log(intrinsic + put);
}

/// log Black-Scholes put price, mirrored.
inline double log_bs_put_price(const MarketFrame& frame, double log_strike, Vol vol) {
    const auto g = detail::bs_geometry(frame, log_strike, vol.sigma);
    const double log_disc_fwd = -frame.r * frame.T + frame.log_forward();
    if (g.k <= 0.0) return log_disc_fwd + detail::log_put_norm(g);
    const double call = std::exp(log_disc_fwd + detail::log_call_norm(g));
    const double intrinsic = std::exp(log_strike) * frame.discount() - frame.x0;
    return std::log(intrinsic + call);
}

inline double bs_call_price(const MarketFrame& frame, double strike, Vol vol) {
    if (!(strike > 0.0)) throw domain_error("bs_call_price: strike must be positive");
    return std::exp(log_bs_call_price(frame, std::log(strike), vol));
}

/// Put from the same OTM kernel; satisfies parity with bs_call_price to
/// machine rounding by construction.
inline double bs_put_price(const MarketFrame& frame, double strike, Vol vol) {
    if (!(strike > 0.0)) throw domain_error("bs_put_price: strike must be positive");
    return std::exp(log_bs_put_price(frame, std::log(strike), vol));
}

/// Black-Scholes vega (identical for call and put), in log form.
inline double log_bs_vega(const MarketFrame& frame, double log_strike, Vol vol) {
    const auto g = detail::bs_geometry(frame, log_strike, vol.sigma);
    return std::log(frame.x0) + log_norm_pdf(g.d1) + 0.5 * std::log(frame.T);
}

namespace detail {

/// Solve log_otm_price(sigma) = target on the OTM side (call if k >= 0, put
/// otherwise) with a bisection-safeguarded Newton iteration. The map is
/// strictly increasing in sigma, so the bracket always closes.
inline double solve_otm_log_price(const MarketFrame& frame, double log_strike, double target,
                                  bool call_side) {
    auto eval = [&](double sigma) {
        const auto g = bs_geometry(frame, log_strike, sigma);
        const double base = -frame.r * frame.T + frame.log_forward();
        return base + (call_side ? log_call_norm(g) : log_put_norm(g));
    };

    double lo = 1e-12, hi = 1.0;
    while (eval(hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9) throw band_error("implied_vol: no volatility matches the target price");
    }
    while (eval(lo) > target) {
        hi = lo;
        lo *= 0.5;
        if (lo < 1e-300) throw band_error("implied_vol: target price at the degenerate-vol edge");
    }

    double sigma = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double g = eval(sigma) - target;
        if (g > 0.0) hi = sigma; else lo = sigma;
        const double log_vega = log_bs_vega(frame, log_strike, Vol(sigma));
        const double log_price = g + target;
        const double step = -g / std::exp(log_vega - log_price);
        double next = sigma + step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // safeguard
        if (std::abs(next - sigma) < 1e-16 * sigma || std::abs(g) < 1e-14) {
            sigma = next;
            break;
        }
        sigma = next;
    }
    return sigma;
}

}  // namespace detail

/// Implied volatility of a call given in log-price form. The strike may be on
/// either side of the forward; in the ITM region the inversion runs on the
/// put time value obtained through parity.
inline Vol implied_vol_from_log_call(const MarketFrame& frame, double log_strike,
                                     double log_call) {
    const double k = log_strike - frame.log_forward();
    if (k >= 0.0) {
        if (!(log_call < std::log(frame.x0)))
            throw band_error("implied_vol: call price above spot");
        return Vol(detail::solve_otm_log_price(frame, log_strike, log_call, true));
    }
    const double intrinsic = frame.x0 - std::exp(log_strike) * frame.discount();
    const double tv = std::exp(log_call) - intrinsic;
    if (!(tv > 0.0)) throw band_error("implied_vol: call price at/below intrinsic value");
    return Vol(detail::solve_otm_log_price(frame, log_strike, std::log(tv), false));
}

/// Implied volatility of a put given in log-price form (the natural entry
/// point in the small-strike wing).
inline Vol implied_vol_from_log_put(const MarketFrame& frame, double log_strike,
                                    double log_put) {
    const double k = log_strike - frame.log_forward();
    if (k <= 0.0) {
        if (!(log_put < log_strike - frame.r * frame.T))
            throw band_error("implied_vol: put price above discounted strike");
        return Vol(detail::solve_otm_log_price(frame, log_strike, log_put, false));
    }
    const double intrinsic = std::exp(log_strike) * frame.discount() - frame.x0;
    const double tv = std::exp(log_put) - intrinsic;
    if (!(tv > 0.0)) throw band_error("implied_vol: put price at/below intrinsic value");
    return Vol(detail::solve_otm_log_price(frame, log_strike, std::log(tv), true));
}

/// Implied volatility from a plain call price. Rejects prices outside the
/// static no-arbitrage band ((x0 - K e^{-rT})^+, x0).
inline Vol implied_vol(const MarketFrame& frame, double strike, double price) {
    if (!(strike > 0.0)) throw domain_error("implied_vol: strike must be positive");
    const double intrinsic = std::max(frame.x0 - strike * frame.discount(), 0.0);
    if (!(price > intrinsic && price < frame.x0))
        throw band_error("implied_vol: price outside the no-arbitrage band");
    return implied_vol_from_log_call(frame, std::log(strike), std::log(price));
}

}  // namespace volwing
