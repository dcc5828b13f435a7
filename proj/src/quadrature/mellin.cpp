#include "sptree/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace sptree::quadrature {

namespace {

constexpr double kStep = 2.0;       // probe spacing in u = log t
constexpr double kUMin = -700.0;
constexpr double kUMax = 700.0;

struct Cutoff {
    double u;
    double tail;
    std::size_t probes;
};

// Walks toward u -> -inf until two consecutive probes are below the target.
// With |g| decaying at least linearly in t, the remaining integral in u is
// bounded by |g| at the cutoff.
Cutoff lower_cutoff(const Integrand& G, double u_start, double target) {
    Cutoff c{u_start, 0.0, 0};
    double prev = std::abs(G(u_start));
    ++c.probes;
    for (double u = u_start - kStep; u >= kUMin; u -= kStep) {
        const double cur = std::abs(G(u));
        ++c.probes;
        if (!std::isfinite(cur)) throw NumericalFailure("mellin: non-finite integrand near t = 0");
        if (cur <= target && prev <= target * std::exp(kStep)) {
            c.u = u;
            c.tail = std::max(cur, prev * std::exp(-kStep));
            return c;
        }
        prev = cur;
    }
    throw QuadratureError("mellin: integrand does not vanish as t -> 0", IntegralResult{});
}

// Walks toward u -> +inf, estimating the power-law exponent a of |g| ~ t^-a
// from successive probes; the tail beyond U is about |g(U)| / a.
Cutoff upper_cutoff(const Integrand& G, double u_start, double target) {
    Cutoff c{u_start, 0.0, 0};
    double prev = std::abs(G(u_start));
    ++c.probes;
    for (double u = u_start + kStep; u <= kUMax; u += kStep) {
        const double cur = std::abs(G(u));
        ++c.probes;
        if (!std::isfinite(cur)) throw NumericalFailure("mellin: non-finite integrand at large t");
        if (cur == 0.0 && prev == 0.0) {
            c.u = u;
            return c;
        }
        if (cur > 0.0 && prev > 0.0 && cur < prev) {
            const double a = (std::log(prev) - std::log(cur)) / kStep;
            const double tail = std::max(cur / a, prev * std::exp(-a * kStep) / a);
            if (a > 0.05 && tail <= target) {
                c.u = u;
                c.tail = tail;
                return c;
            }
        } else if (cur == 0.0 && prev <= target) {
            c.u = u;
            c.tail = prev;
            return c;
        }
        prev = cur;
    }
    throw QuadratureError("mellin: integrand tail does not decay (nonconvergent at t -> inf)",
                          IntegralResult{});
}

} // namespace

IntegralResult integrate_mellin_window(const Integrand& g, double lo, double hi,
                                       const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(lo >= 0.0) || !(hi > lo)) throw InvalidArgument("mellin: invalid window");
    const Integrand G = [&g](double u) { return g(std::exp(u)); };
    const double tail_target = 0.1 * cfg.abs_tol;
    IntegralResult res;
    double tails = 0.0;

    double u_hi;
    if (std::isinf(hi)) {
        const Cutoff c = upper_cutoff(G, lo > 0.0 ? std::max(std::log(lo), 0.0) : 0.0, tail_target);
        u_hi = c.u;
        tails += c.tail;
        res.evaluations += c.probes;
    } else {
        u_hi = std::log(hi);
    }
    double u_lo;
    if (lo == 0.0) {
        const Cutoff c = lower_cutoff(G, std::min(u_hi, 0.0), tail_target);
        u_lo = c.u;
        tails += c.tail;
        res.evaluations += c.probes;
    } else {
        u_lo = std::log(lo);
    }
    if (!(u_hi > u_lo)) return res;

    QuadratureConfig inner = cfg;
    inner.abs_tol = std::max(cfg.abs_tol - tails, 0.5 * cfg.abs_tol);
    try {
        IntegralResult body = integrate_adaptive(G, u_lo, u_hi, inner);
        res.value = body.value;
        res.error_estimate = body.error_estimate + tails;
        res.evaluations += body.evaluations;
    } catch (const QuadratureError& e) {
        IntegralResult partial = e.partial();
        partial.error_estimate += tails;
        partial.evaluations += res.evaluations;
        throw QuadratureError(e.what(), partial);
    }
    return res;
}

IntegralResult integrate_mellin(const Integrand& g, const QuadratureConfig& cfg) {
    cfg.validate();
    QuadratureConfig half = cfg;
    half.abs_tol = 0.5 * cfg.abs_tol;
    const double c = cfg.split_point;
    IntegralResult lower = integrate_mellin_window(g, 0.0, c, half);
    IntegralResult upper;
    try {
        upper = integrate_mellin_window(g, c, std::numeric_limits<double>::infinity(), half);
    } catch (const QuadratureError& e) {
        IntegralResult partial = e.partial();
        partial.value += lower.value;
        partial.error_estimate += lower.error_estimate;
        throw QuadratureError(e.what(), partial);
    }
    return {lower.value + upper.value, lower.error_estimate + upper.error_estimate,
            lower.evaluations + upper.evaluations};
}

} // namespace sptree::quadrature
