#pragma once

// Adaptive integration: Gauss-Kronrod panels, Mellin integrals over (0, inf)
// in the variable u = log t, periodic trapezoid sums and tanh-sinh for
// logarithmic endpoint singularities.

#include <cstddef>
#include <functional>
#include <limits>

#include "sptree/error.hpp"

namespace sptree::quadrature {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    double split_point = 1.0;
    std::size_t max_subdivisions = 4000;

    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

// Raised when the requested tolerance is not met; carries the best estimate.
class QuadratureError : public NumericalFailure {
public:
    QuadratureError(const std::string& what, IntegralResult partial)
        : NumericalFailure(what), partial_(partial) {}
    const IntegralResult& partial() const { return partial_; }

private:
    IntegralResult partial_;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 21-point Gauss-Kronrod on [a, b].
IntegralResult integrate_adaptive(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg = {});

// Integral of g(t) dt/t over (0, inf), split at cfg.split_point.
IntegralResult integrate_mellin(const Integrand& g, const QuadratureConfig& cfg = {});

// Integral of g(t) dt/t over (lo, hi); lo = 0 and hi = inf are allowed and
// trigger the decay-based cutoffs.
IntegralResult integrate_mellin_window(const Integrand& g, double lo, double hi,
                                       const QuadratureConfig& cfg = {});

// (1/2pi) times the integral of a smooth 2pi-periodic f over [-pi, pi].
// min_points seeds the trapezoid grid for oscillatory integrands.
IntegralResult integrate_periodic(const Integrand& f, double tol,
                                  std::size_t min_points = 16);

// Integral over (a, b) of h with at most logarithmic endpoint singularities.
IntegralResult integrate_log_endpoint(const Integrand& h, double tol, double a = 0.0,
                                      double b = 1.0);

} // namespace sptree::quadrature
