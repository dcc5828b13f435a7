#include "sptree/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sptree/error.hpp"
#include "sptree/quadrature.hpp"

namespace sptree::specfun {

namespace {

constexpr double kSeriesLimit = 30.0;
// Beyond this the leading series term exp(-t) (t/2)^x / x! may underflow.
constexpr double kSeriesFallbackLimit = 700.0;

double series_scaled(std::int64_t x, double t) {
    const double half = 0.5 * t;
    const double xd = static_cast<double>(x);
    double term;
    if (x <= 64) {
        term = std::exp(-t);
        for (std::int64_t i = 1; i <= x; ++i) term *= half / static_cast<double>(i);
    } else {
        term = std::exp(-t + xd * std::log(half) - std::lgamma(xd + 1.0));
    }
    if (term == 0.0) return 0.0;
    double sum = term;
    const double q = half * half;
    for (std::int64_t k = 0; k < 5000; ++k) {
        term *= q / (static_cast<double>(k + 1) * static_cast<double>(k + 1 + x));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

// Hankel expansion; returns false unless the terms decrease monotonically to
// full precision (growing terms mean order^2 is not small against t).
bool asymptotic_scaled(std::int64_t x, double t, double& out) {
    const double mu = 4.0 * static_cast<double>(x) * static_cast<double>(x);
    double term = 1.0, sum = 1.0, last = 1.0;
    for (int k = 0; k < 400; ++k) {
        const double odd = 2.0 * k + 1.0;
        term *= -(mu - odd * odd) / (8.0 * t * (k + 1.0));
        const double mag = std::abs(term);
        if (mag < 1e-17 * std::abs(sum)) {
            sum += term;
            out = sum / std::sqrt(2.0 * std::numbers::pi * t);
            return true;
        }
        if (mag > last) return false;
        last = mag;
        sum += term;
    }
    return false;
}

double quadrature_scaled(std::int64_t x, double t) {
    // (1/pi) int_0^W exp(-2t sin^2(th/2)) cos(x th) dth; sin^2(th/2) >= th^2/pi^2
    // puts everything beyond W below e^-40 of the peak.
    const double W = std::min(std::numbers::pi, std::numbers::pi * std::sqrt(40.0 / (2.0 * t)));
    const double xd = static_cast<double>(x);
    quadrature::QuadratureConfig cfg;
    cfg.abs_tol = 1e-17 * std::numbers::pi / std::sqrt(2.0 * std::numbers::pi * t);
    cfg.rel_tol = 1e-14;
    cfg.max_subdivisions = 5000;
    auto f = [&](double th) {
        const double s = std::sin(0.5 * th);
        return std::exp(-2.0 * t * s * s) * std::cos(xd * th);
    };
    try {
        return quadrature::integrate_adaptive(f, 0.0, W, cfg).value / std::numbers::pi;
    } catch (const quadrature::QuadratureError& e) {
        // Accuracy is limited by cancellation, not by the panel budget.
        return e.partial().value / std::numbers::pi;
    }
}

} // namespace

double bessel_i_scaled(std::int64_t order, double t) {
    if (!(t >= 0.0)) throw InvalidArgument("bessel_i_scaled: t must be non-negative");
    const std::int64_t x = order < 0 ? -order : order;
    if (t == 0.0) return x == 0 ? 1.0 : 0.0;
    if (std::isinf(t)) return 0.0;
    if (t < kSeriesLimit) return series_scaled(x, t);
    double v;
    if (asymptotic_scaled(x, t, v)) return v;
    if (t < kSeriesFallbackLimit) return series_scaled(x, t);
    return quadrature_scaled(x, t);
}

double bessel_multi_scaled(const std::vector<std::int64_t>& generators, std::int64_t order,
                           double u) {
    if (!(u >= 0.0)) throw InvalidArgument("bessel_multi_scaled: u must be non-negative");
    if (generators.empty()) throw InvalidArgument("bessel_multi_scaled: empty generator set");
    std::int64_t gmax = 0;
    double c = 0.0;
    for (auto g : generators) {
        if (g < 1) throw InvalidArgument("bessel_multi_scaled: generators must be positive");
        gmax = std::max(gmax, g);
        c += static_cast<double>(g) * static_cast<double>(g);
    }
    const std::int64_t m = order < 0 ? -order : order;
    if (generators.size() == 1 && generators[0] == 1) return bessel_i_scaled(m, u);
    if (u == 0.0) return m == 0 ? 1.0 : 0.0;
    if (std::isinf(u)) return 0.0;

    const double md = static_cast<double>(m);
    auto f = [&](double w) {
        double e = 0.0;
        for (auto g : generators) {
            const double s = std::sin(0.5 * static_cast<double>(g) * w);
            e += s * s;
        }
        return std::exp(-2.0 * u * e) * std::cos(md * w);
    };
    if (u < kSeriesLimit) {
        const auto pts = static_cast<std::size_t>(2.0 * (md + u * static_cast<double>(gmax)) + 16.0);
        return quadrature::integrate_periodic(f, 1e-15, pts).value;
    }
    // The exponent is at least 2u w^2/pi^2 on [0, pi] because generator 1 is present.
    const double W = std::min(std::numbers::pi, std::numbers::pi * std::sqrt(40.0 / (2.0 * u)));
    quadrature::QuadratureConfig cfg;
    cfg.abs_tol = 1e-17 * std::numbers::pi / std::sqrt(2.0 * std::numbers::pi * u * c);
    cfg.rel_tol = 1e-14;
    cfg.max_subdivisions = 5000;
    try {
        return quadrature::integrate_adaptive(f, 0.0, W, cfg).value / std::numbers::pi;
    } catch (const quadrature::QuadratureError& e) {
        return e.partial().value / std::numbers::pi;
    }
}

double bessel_tail_bound(std::int64_t K, double u) {
    if (!(u >= 0.0)) throw InvalidArgument("bessel_tail_bound: u must be non-negative");
    if (K < 0) return 1.0;
    if (u == 0.0) return 0.0;
    const double a = static_cast<double>(K + 1);
    const double expo = -a * std::asinh(a / u) + std::sqrt(u * u + a * a) - u;
    return std::min(1.0, 2.0 * std::exp(expo));
}

} // namespace sptree::specfun
