#include "sptree/asym.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "sptree/error.hpp"
#include "sptree/specfun.hpp"

namespace sptree::asym {

namespace {

void check_sides(const std::vector<double>& sides) {
    if (sides.empty()) throw InvalidArgument("epstein: no sides");
    for (double m : sides)
        if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("epstein: sides must be positive");
}

// Sum of Q(k)^{-s} over 0 < Q(k) <= R^2, Q(k) = sum k_i^2 / m_i^2.
double shell_sum(const std::vector<double>& m, double s, double R) {
    const std::size_t r = m.size();
    std::vector<std::int64_t> bound(r), k(r);
    for (std::size_t i = 0; i < r; ++i) {
        bound[i] = static_cast<std::int64_t>(std::floor(R * m[i]));
        k[i] = -bound[i];
    }
    const double R2 = R * R;
    double sum = 0.0;
    for (;;) {
        double q = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            const double x = static_cast<double>(k[i]) / m[i];
            q += x * x;
        }
        if (q > 0.0 && q <= R2) sum += std::pow(q, -s);
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (++k[i] <= bound[i]) break;
            k[i] = -bound[i];
        }
        if (i == r) break;
    }
    return sum;
}

} // namespace

EpsteinValue epstein_zeta_sum(const std::vector<double>& sides, double s) {
    check_sides(sides);
    const double r = static_cast<double>(sides.size());
    if (!(s > 0.5 * r)) throw InvalidArgument("epstein_zeta_sum: requires s > r/2");
    const double scale = std::pow(4.0 * std::numbers::pi * std::numbers::pi, -s);
    EpsteinValue out{sides, s, 0.0, 0.0};

    if (sides.size() == 1) {
        // 2 m^{2s} zeta(2s); the zeta routine carries an Euler-Maclaurin remainder.
        out.value = scale * 2.0 * std::pow(sides[0], 2.0 * s) * specfun::riemann_zeta_real(2.0 * s);
        out.tail_bound = 1e-15 * out.value;
        return out;
    }

    double cell = 1.0;
    for (double m : sides) cell *= m;
    const double surface = 2.0 * std::pow(std::numbers::pi, 0.5 * r) /
                           specfun::gamma_half(static_cast<int>(sides.size()));
    auto estimate = [&](double R) {
        const double tail = cell * surface * std::pow(R, r - 2.0 * s) / (2.0 * s - r);
        return scale * (shell_sum(sides, s, R) + tail);
    };
    double R = std::pow(2e4 / (std::pow(2.0, r) * cell), 1.0 / r);
    R = std::max(R, 2.0);
    double prev = estimate(R);
    constexpr double kTarget = 1e-11;
    constexpr double kMaxPoints = 6e7;
    for (;;) {
        const double next_R = R * std::sqrt(2.0);
        if (std::pow(2.0 * next_R, r) * cell > kMaxPoints) {
            out.value = prev;
            break;
        }
        const double next = estimate(next_R);
        out.tail_bound = std::abs(next - prev);
        out.value = next;
        R = next_R;
        prev = next;
        if (out.tail_bound < kTarget) break;
    }
    return out;
}

double epstein_zeta_prime_zero(const std::vector<double>& sides, double split) {
    check_sides(sides);
    if (!(split > 0.0)) throw InvalidArgument("epstein_zeta_prime_zero: split must be positive");
    const double r = static_cast<double>(sides.size());
    double volume = 1.0;
    for (double b : sides) volume *= b;

    quadrature::QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-13;
    const auto small = quadrature::integrate_mellin_window(
        [&](double t) { return specfun::theta_real_torus_minus_heat(sides, t); }, 0.0, split, cfg);
    const auto large = quadrature::integrate_mellin_window(
        [&](double t) { return specfun::theta_real_torus_minus_one(sides, t); }, split,
        std::numeric_limits<double>::infinity(), cfg);
    const double heat = (2.0 / r) * volume * std::pow(4.0 * std::numbers::pi, -0.5 * r) *
                        std::pow(split, -0.5 * r);
    return small.value - heat - specfun::kEulerGamma - std::log(split) + large.value;
}

} // namespace sptree::asym
