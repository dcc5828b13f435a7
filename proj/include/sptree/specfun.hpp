#pragma once

// Scaled modified I-Bessel functions, the multi-generator Bessel function,
// discrete and real-torus theta functions, Dedekind eta and constants.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sptree/graphs.hpp"

namespace sptree::specfun {

// -Gamma'(1), the Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

// e^{-t} I_x(t) for integer order x and t >= 0.
double bessel_i_scaled(std::int64_t order, double t);

// e^{-d u} I_m^Gamma(u, ..., u) = (1/2pi) int exp(u (sum_g cos(g w) - d)) cos(m w) dw.
double bessel_multi_scaled(const std::vector<std::int64_t>& generators, std::int64_t order,
                           double u);

// Upper bound for sum_{|k| > K} e^{-u} I_k(u) (a Skellam tail).
double bessel_tail_bound(std::int64_t K, double u);

struct ThetaValue {
    double t = 0.0;
    double value = 0.0;
    // Certified bound on the truncated tail (lattice side only).
    double tail_bound = 0.0;
    // Truncation level used for each Bessel index (lattice side only).
    std::int64_t truncation = 0;
};

// Sum over the full Laplacian spectrum of exp(-lambda t).
ThetaValue theta_discrete_spectral(const graphs::GraphSpec& spec, double t);

// Lattice-sum side of theta inversion. truncation = 0 picks the smallest
// level whose certified tail is below 1e-13; an explicit level whose tail
// exceeds 1e-12 is rejected with NumericalFailure.
ThetaValue theta_discrete_bessel(const graphs::GraphSpec& spec, double t,
                                 std::int64_t truncation = 0);

// Theta function of the unit circle, sum_k exp(-4 pi^2 k^2 t).
double theta_circle(double t);

// Theta function of R^r / diag(sides) Z^r.
double theta_real_torus(const std::vector<double>& sides, double t);
// theta_real_torus - 1, accurate when the value is close to 1.
double theta_real_torus_minus_one(const std::vector<double>& sides, double t);
// theta_real_torus - V (4 pi t)^{-r/2}, accurate when t is small.
double theta_real_torus_minus_heat(const std::vector<double>& sides, double t);

// eta(i y) for y > 0.
double dedekind_eta(double y);

// Riemann zeta for real s > 1.
double riemann_zeta_real(double s);

// Catalan's constant.
double catalan_constant();

// Gamma(d/2) for a positive integer d.
double gamma_half(int d);

} // namespace sptree::specfun
