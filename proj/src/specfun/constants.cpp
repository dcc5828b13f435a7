#include "sptree/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sptree/error.hpp"

namespace sptree::specfun {

double dedekind_eta(double y) {
    if (!(y > 0.0) || !std::isfinite(y)) throw InvalidArgument("dedekind_eta: y must be positive");
    // eta(i/y) = sqrt(y) eta(i y) keeps the product short.
    if (y < 1.0) return dedekind_eta(1.0 / y) / std::sqrt(y);
    const double q = std::exp(-2.0 * std::numbers::pi * y);
    double prod = 1.0, qn = q;
    while (qn >= 1e-17) {
        prod *= 1.0 - qn;
        qn *= q;
    }
    return std::exp(-std::numbers::pi * y / 12.0) * prod;
}

double riemann_zeta_real(double s) {
    if (!(s > 1.0)) throw InvalidArgument("riemann_zeta_real: s must exceed 1");
    if (std::isinf(s)) return 1.0;
    // Euler-Maclaurin with N = 20 and Bernoulli corrections through B_20.
    constexpr int N = 20;
    constexpr std::array<double, 10> bernoulli = {
        1.0 / 6,   -1.0 / 30,       1.0 / 42,   -1.0 / 30,     5.0 / 66,
        -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};
    double sum = 0.0;
    for (int k = N - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
    const double Nd = N;
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Nd, -s);
    // Term j: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
    double rising = s, fact = 2.0, power = std::pow(Nd, -s - 1.0);
    for (std::size_t j = 0; j < bernoulli.size(); ++j) {
        sum += bernoulli[j] / fact * rising * power;
        const double a = s + 2.0 * j + 1.0, b = s + 2.0 * j + 2.0;
        rising *= a * b;
        fact *= (2.0 * j + 3.0) * (2.0 * j + 4.0);
        power /= Nd * Nd;
    }
    return sum;
}

double catalan_constant() {
    // sum (-1)^k / (2k+1)^2 with the Cohen-Rodriguez Villegas-Zagier acceleration.
    constexpr int n = 30;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        const double odd = 2.0 * k + 1.0;
        s += c / (odd * odd);
        b *= (static_cast<double>(k) + n) * (static_cast<double>(k) - n) / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

double gamma_half(int d) {
    if (d < 1) throw InvalidArgument("gamma_half: d must be positive");
    if (d % 2 == 0) {
        double v = 1.0;
        for (int k = 2; k < d / 2; ++k) v *= k;
        return v;
    }
    // Gamma(1/2) = sqrt(pi), Gamma(x+1) = x Gamma(x).
    double v = std::sqrt(std::numbers::pi);
    for (int k = 1; k < d; k += 2) v *= 0.5 * k;
    return v;
}

} // namespace sptree::specfun
