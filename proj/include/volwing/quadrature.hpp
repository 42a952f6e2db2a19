#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "volwing/errors.hpp"

namespace volwing::quad {

/// Log-domain adaptive quadrature.
///
/// Integrands are supplied as u -> log f(u) with f > 0 (or exactly zero,
/// encoded as -inf). Results are returned as log of the integral, so values
/// like \int e^{-10^5} du keep full relative accuracy. Per-panel Gauss(7) /
/// Kronrod(15) with the local maximum factored out; panels are refined worst
/// error first until the estimated global relative error meets the target.

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

struct Result {
    double log_value = neg_inf;  ///< log of the integral
    double rel_err = 0.0;        ///< estimated relative error
    std::size_t evals = 0;
    bool converged = true;

    double value() const { return std::exp(log_value); }
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr std::array<double, 15> gk_nodes = {
    -0.9914553711208126, -0.9491079123427585, -0.8648644233597691, -0.7415311855993945,
    -0.5860872354676911, -0.4058451513773972, -0.2077849550078985, 0.0,
    0.2077849550078985,  0.4058451513773972,  0.5860872354676911,  0.7415311855993945,
    0.8648644233597691,  0.9491079123427585,  0.9914553711208126};

inline constexpr std::array<double, 15> kronrod_w = {
    0.022935322010529224, 0.06309209262997855, 0.10479001032225018, 0.14065325971552592,
    0.16900472663926790,  0.19035057806478540, 0.20443294007529889, 0.20948214108472782,
    0.20443294007529889,  0.19035057806478540, 0.16900472663926790, 0.14065325971552592,
    0.10479001032225018,  0.06309209262997855, 0.022935322010529224};

// Gauss-7 weights matched to every other Kronrod node (indices 1,3,...,13).
inline constexpr std::array<double, 7> gauss_w = {
    0.12948496616886969, 0.27970539148927664, 0.38183005050511894, 0.41795918367346935,
    0.38183005050511894, 0.27970539148927664, 0.12948496616886969};

struct Panel {
    double a, b;
    double log_value;  // log of the Kronrod estimate over [a,b]
    double log_err;    // log of |K - G| scaled the same way
};

template <typename LogF>
Panel eval_panel(LogF&& lf, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    std::array<double, 15> lv{};
    double m = neg_inf;
    for (int i = 0; i < 15; ++i) {
        lv[i] = lf(c + h * gk_nodes[i]);
        if (lv[i] > m) m = lv[i];
    }
    Panel p{a, b, neg_inf, neg_inf};
    if (m == neg_inf) return p;  // integrand vanishes on the whole panel
    double sk = 0.0, sg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = std::exp(lv[i] - m);
        sk += kronrod_w[i] * v;
        if (i % 2 == 1) sg += gauss_w[i / 2] * v;
    }
    p.log_value = m + std::log(h * sk);
    const double diff = h * std::abs(sk - sg);
    p.log_err = diff > 0.0 ? m + std::log(diff) : neg_inf;
    return p;
}

inline double log_add(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

}  // namespace detail

/// Adaptive integral of exp(lf(u)) du over the finite interval [a, b].
template <typename LogF>
Result log_integrate(LogF&& lf, double a, double b, double rel_tol = 1e-10,
                     std::size_t max_panels = 4000) {
    Result res;
    if (!(b > a)) return res;

    auto worse = [](const detail::Panel& x, const detail::Panel& y) {
        return x.log_err < y.log_err;
    };
    std::priority_queue<detail::Panel, std::vector<detail::Panel>, decltype(worse)> heap(worse);

    // seed with a handful of panels so a sharply peaked integrand is seen
    const int seed = 8;
    double total = detail::neg_inf, err = detail::neg_inf;
    for (int i = 0; i < seed; ++i) {
        auto p = detail::eval_panel(lf, a + (b - a) * i / seed, a + (b - a) * (i + 1) / seed);
        res.evals += 15;
        total = detail::log_add(total, p.log_value);
        err = detail::log_add(err, p.log_err);
        heap.push(p);
    }

    std::size_t n = seed;
    while (err > total + std::log(rel_tol) && n < max_panels) {
        auto p = heap.top();
        heap.pop();
        if (p.log_err == detail::neg_inf) break;  // nothing refinable left
        const double mid = 0.5 * (p.a + p.b);
        auto p1 = detail::eval_panel(lf, p.a, mid);
        auto p2 = detail::eval_panel(lf, mid, p.b);
        res.evals += 30;
        ++n;
        // rebuild running sums; cheap because the heap stays small
        total = detail::neg_inf;
        err = detail::neg_inf;
        heap.push(p1);
        heap.push(p2);
        std::vector<detail::Panel> all;
        all.reserve(heap.size());
        while (!heap.empty()) {
            all.push_back(heap.top());
            heap.pop();
        }
        for (const auto& q : all) {
            total = detail::log_add(total, q.log_value);
            err = detail::log_add(err, q.log_err);
        }
        for (auto& q : all) heap.push(q);
    }

    res.log_value = total;
    res.rel_err = total == detail::neg_inf ? 0.0 : std::exp(err - total);
    res.converged = res.rel_err <= rel_tol * 4.0;
    return res;
}

/// Integral of exp(lf(u)) du over [a, infinity).
///
/// Chunks of geometrically growing width are integrated until the analytic
/// remainder estimate (local log-slope continuation, exact for pure
/// exponential decay) drops below the tolerance; the remainder is then added.
/// `decay_hint`, when positive, is a lower bound on the eventual decay rate
/// used to size the first chunk.
template <typename LogF>
Result log_integrate_tail(LogF&& lf, double a, double rel_tol = 1e-10, double decay_hint = 0.0,
                          std::size_t max_chunks = 200) {
    Result res;
    double width = decay_hint > 0.0 ? 4.0 / decay_hint : 4.0;
    double total = detail::neg_inf;
    double err = detail::neg_inf;
    double lo = a;
    bool done = false;

    for (std::size_t k = 0; k < max_chunks; ++k) {
        const double hi = lo + width;
        auto chunk = log_integrate(lf, lo, hi, rel_tol * 0.5);
        res.evals += chunk.evals;
        total = detail::log_add(total, chunk.log_value);
        err = detail::log_add(err, chunk.log_err());
        lo = hi;
        width *= 1.6;

        // local decay rate at the frontier -> analytic remainder bound
        const double h = std::max(1e-3, width * 1e-3);
        const double f0 = lf(lo);
        const double f1 = lf(lo + h);
        if (f0 == detail::neg_inf && f1 == detail::neg_inf) {
            done = true;  // integrand has run off its support
            break;
        }
        const double rate = (f0 - f1) / h;
        if (rate > 1e-14) {
            const double log_remainder = f0 - std::log(rate);
            if (log_remainder < total + std::log(rel_tol * 0.5)) {
                total = detail::log_add(total, log_remainder);
                done = true;
                break;
            }
        }
    }

    res.log_value = total;
    res.rel_err = total == detail::neg_inf ? 0.0 : std::exp(err - total);
    res.converged = done && res.rel_err <= rel_tol * 4.0;
    return res;
}

}  // namespace volwing::quad
