#include "sptree/specfun.hpp"

#include <cmath>
#include <numbers>

#include "sptree/error.hpp"

namespace sptree::specfun {

namespace {

constexpr double kAutoTail = 1e-13;
constexpr double kMaxTail = 1e-12;

void check_t(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("theta: t must be positive and finite");
}

// 2 sum_{k>=1} exp(-a k^2), summed until terms drop below 1e-18 of the total.
double gauss_tail(double a) {
    double sum = 0.0;
    for (std::int64_t k = 1;; ++k) {
        const double term = std::exp(-a * static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (term < 1e-18 * (1.0 + sum) || term == 0.0) break;
    }
    return 2.0 * sum;
}

struct CircleParts {
    double theta;  // theta_circle(s)
    double delta;  // theta - 1
    double eps;    // theta * sqrt(4 pi s) - 1
};

CircleParts circle_parts(double s) {
    const double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
    const double root = std::sqrt(4.0 * std::numbers::pi * s);
    CircleParts p{};
    // Each part comes from the representation in which it is a small positive
    // sum; the other follows without cancellation.
    if (s >= 0.02) {
        p.delta = gauss_tail(four_pi_sq * s);
        p.theta = 1.0 + p.delta;
    }
    if (s <= 50.0) {
        p.eps = gauss_tail(1.0 / (4.0 * s));
        if (s < 0.02) {
            p.theta = (1.0 + p.eps) / root;
            p.delta = p.theta - 1.0;
        }
    } else {
        p.eps = p.theta * root - 1.0;
    }
    return p;
}

double spectral_theta(const graphs::Spectrum& sp, double t) {
    double sum = 0.0;
    for (double lambda : sp.eigenvalues) sum += std::exp(-lambda * t);
    return sum;
}

std::int64_t choose_truncation(double u, double scale) {
    std::int64_t K = 1;
    while (scale * bessel_tail_bound(K, u) > kAutoTail) K = K < 16 ? K + 1 : K + K / 4;
    return K;
}

} // namespace

ThetaValue theta_discrete_spectral(const graphs::GraphSpec& spec, double t) {
    check_t(t);
    return ThetaValue{t, spectral_theta(graphs::spectrum(spec), t), 0.0, 0};
}

ThetaValue theta_discrete_bessel(const graphs::GraphSpec& spec, double t, std::int64_t truncation) {
    check_t(t);
    const double u = 2.0 * t;
    const double nv = static_cast<double>(graphs::vertex_count(spec));
    const auto d = static_cast<double>(graphs::dimension(spec));
    const double scale = nv * d;
    std::int64_t K = truncation;
    if (K <= 0) {
        K = choose_truncation(u, scale);
    } else if (scale * bessel_tail_bound(K, u) > kMaxTail) {
        throw NumericalFailure("theta_discrete_bessel: truncation " + std::to_string(K) +
                               " leaves a tail above 1e-12; at least " +
                               std::to_string(choose_truncation(u, scale)) + " is required");
    }
    const double bound = scale * bessel_tail_bound(K, u);

    std::vector<double> table(static_cast<std::size_t>(K) + 1);
    for (std::int64_t k = 0; k <= K; ++k) table[static_cast<std::size_t>(k)] = bessel_i_scaled(k, u);
    auto T = [&](std::int64_t k) { return table[static_cast<std::size_t>(k < 0 ? -k : k)]; };

    if (auto tor = std::get_if<graphs::TorusSpec>(&spec)) {
        double value = 1.0;
        for (auto l : tor->sides) {
            double f = 0.0;
            for (std::int64_t k = -(K / l); k <= K / l; ++k) f += T(k * l);
            value *= static_cast<double>(l) * f;
        }
        return ThetaValue{t, value, bound, K};
    }

    // Lattice Lambda_Gamma: y_1 = n k_1 - sum_i gamma_i k_i, y_i = k_i.
    const auto& c = std::get<graphs::CirculantSpec>(spec);
    const std::size_t inner = c.generators.size() - 1;
    std::vector<std::int64_t> k(inner, -K);
    double sum = 0.0;
    for (;;) {
        double weight = 1.0;
        std::int64_t shift = 0;
        for (std::size_t i = 0; i < inner; ++i) {
            weight *= T(k[i]);
            shift += c.generators[i + 1] * k[i];
        }
        if (weight != 0.0) {
            // All k_1 with |n k_1 - shift| <= K.
            const auto lo = static_cast<std::int64_t>(std::ceil(static_cast<double>(shift - K) / static_cast<double>(c.n)));
            const auto hi = static_cast<std::int64_t>(std::floor(static_cast<double>(shift + K) / static_cast<double>(c.n)));
            double s = 0.0;
            for (std::int64_t k1 = lo; k1 <= hi; ++k1) {
                const std::int64_t y = c.n * k1 - shift;
                if (y >= -K && y <= K) s += T(y);
            }
            sum += weight * s;
        }
        std::size_t i = 0;
        for (; i < inner; ++i) {
            if (++k[i] <= K) break;
            k[i] = -K;
        }
        if (i == inner) break;
    }
    return ThetaValue{t, static_cast<double>(c.n) * sum, bound, K};
}

double theta_circle(double t) {
    check_t(t);
    if (t >= 1.0) return 1.0 + gauss_tail(4.0 * std::numbers::pi * std::numbers::pi * t);
    return (1.0 + gauss_tail(1.0 / (4.0 * t))) / std::sqrt(4.0 * std::numbers::pi * t);
}

namespace {

void check_sides(const std::vector<double>& sides) {
    if (sides.empty()) throw InvalidArgument("real torus: no sides");
    for (double b : sides)
        if (!(b > 0.0) || !std::isfinite(b)) throw InvalidArgument("real torus: sides must be positive");
}

} // namespace

double theta_real_torus(const std::vector<double>& sides, double t) {
    check_t(t);
    check_sides(sides);
    double v = 1.0;
    for (double b : sides) v *= theta_circle(t / (b * b));
    return v;
}

double theta_real_torus_minus_one(const std::vector<double>& sides, double t) {
    check_t(t);
    check_sides(sides);
    double acc = 0.0;
    for (double b : sides) acc += std::log1p(circle_parts(t / (b * b)).delta);
    return std::expm1(acc);
}

double theta_real_torus_minus_heat(const std::vector<double>& sides, double t) {
    check_t(t);
    check_sides(sides);
    double acc = 0.0, heat = 1.0;
    const double root = std::sqrt(4.0 * std::numbers::pi * t);
    for (double b : sides) {
        acc += std::log1p(circle_parts(t / (b * b)).eps);
        heat *= b / root;
    }
    return heat * std::expm1(acc);
}

} // namespace sptree::specfun
