#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "volwing/black_scholes.hpp"
#include "volwing/market.hpp"

namespace volwing {

/// Evaluable strike -> price map at fixed expiry, stored in log-strike /
/// log-price coordinates so deep wings (K ~ e^{200}, prices ~ e^{-10^5})
/// never underflow. The universal input to every wing formula.
class PriceCurve {
public:
    using LogFn = std::function<double(double)>;  // log-strike -> log-price

    PriceCurve() = default;

    static PriceCurve from_log(LogFn f) {
        PriceCurve c;
        c.log_fn_ = std::move(f);
        return c;
    }

    /// Wrap a plain strike -> price function (loses the deep wings to
    /// underflow; fine for moderate strikes and tabulated data).
    template <typename F>
    static PriceCurve from_price_fn(F f) {
        return from_log([f = std::move(f)](double lk) { return std::log(f(std::exp(lk))); });
    }

    double log_price(double log_strike) const { return log_fn_(log_strike); }
    double price(double strike) const { return std::exp(log_fn_(std::log(strike))); }
    double operator()(double strike) const { return price(strike); }
    bool valid() const { return static_cast<bool>(log_fn_); }

private:
    LogFn log_fn_;
};

/// Black-Scholes call curve at fixed vol.
inline PriceCurve bs_call_curve(const MarketFrame& frame, Vol vol) {
    return PriceCurve::from_log(
        [frame, vol](double lk) { return log_bs_call_price(frame, lk, vol); });
}

/// Black-Scholes put curve at fixed vol.
inline PriceCurve bs_put_curve(const MarketFrame& frame, Vol vol) {
    return PriceCurve::from_log(
        [frame, vol](double lk) { return log_bs_put_price(frame, lk, vol); });
}

/// Call curve of the Pareto model with density (beta-1) x^{-beta} on [1,inf):
/// C(K) = e^{-rT} K^{2-beta} / (beta-2) for K >= 1. The matching frame has
/// x0 = e^{-rT} (beta-1)/(beta-2).
inline PriceCurve pareto_call_curve(double beta, double rate = 0.0, double expiry = 1.0) {
    if (!(beta > 2.0)) throw domain_error("pareto_call_curve: beta must exceed 2");
    const double log_disc = -rate * expiry;
    return PriceCurve::from_log([beta, log_disc](double lk) {
        return log_disc + (2.0 - beta) * lk - std::log(beta - 2.0);
    });
}

/// Put curve obtained from a call curve through put-call parity, evaluated in
/// linear space. Only trustworthy where the put is not many orders below x0.
inline PriceCurve parity_put_from_call(const MarketFrame& frame, PriceCurve call) {
    return PriceCurve::from_log([frame, call = std::move(call)](double lk) {
        const double c = std::exp(call.log_price(lk));
        return std::log(c - frame.x0 + std::exp(lk) * frame.discount());
    });
}

/// Call curve obtained from a put curve through parity (linear space).
inline PriceCurve parity_call_from_put(const MarketFrame& frame, PriceCurve put) {
    return PriceCurve::from_log([frame, put = std::move(put)](double lk) {
        const double p = std::exp(put.log_price(lk));
        return std::log(p + frame.x0 - std::exp(lk) * frame.discount());
    });
}

}  // namespace volwing
