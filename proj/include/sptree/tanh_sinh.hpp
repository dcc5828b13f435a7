#pragma once

// Double-exponential quadrature templated on the scalar type, so the same rule
// serves double and multiprecision callers.

#include <cmath>
#include <cstddef>
#include <limits>

#include <boost/math/special_functions/fpclassify.hpp>

#include "sptree/error.hpp"

namespace sptree::quadrature {

template <class Real>
struct TanhSinhResult {
    Real value;
    Real error_estimate;
    std::size_t evaluations = 0;
    bool converged = false;
};

// Integral of f over (a, b). `eps` is the unit roundoff of Real at the current
// precision; the abscissa range is cut where the weights fall below eps^2.
// f receives abscissae that never coincide with an endpoint.
template <class Real, class F>
TanhSinhResult<Real> tanh_sinh(F&& f, const Real& a, const Real& b, const Real& tol,
                               const Real& eps, std::size_t max_levels = 12) {
    using std::cosh;
    using std::exp;
    using std::log;
    using std::sinh;
    using std::abs;
    using std::asinh;
    using std::atan;
    const Real half_pi = Real(2) * atan(Real(1));
    const Real half = (b - a) / 2;
    // Window: exp(-pi sinh t) < eps^2.
    const Real t_max = asinh(-2 * log(eps) / (2 * half_pi));

    TanhSinhResult<Real> res{Real(0), Real(0), 0, false};
    // Largest |w f| near the window edge: stays tiny for integrable endpoint
    // behaviour and does not for a 1/x type blow-up.
    Real edge = 0;
    auto node = [&](const Real& t, Real& acc) {
        const Real v = half_pi * sinh(t);
        const Real e = exp(-2 * abs(v));
        // Distance to the nearer endpoint, computed without cancellation.
        const Real dist = (b - a) * e / (1 + e);
        const Real x = t < 0 ? Real(a + dist) : Real(b - dist);
        if (!(x > a) || !(x < b)) return;
        const Real ch = cosh(v);
        const Real w = half * half_pi * cosh(t) / (ch * ch);
        if (w == 0) return;
        const Real fx = f(x);
        ++res.evaluations;
        acc += w * fx;
        if (abs(t) > t_max - Real(0.25) && abs(w * fx) > edge) edge = abs(w * fx);
    };

    Real h = 1;
    Real sum = 0;
    node(Real(0), sum);
    for (Real t = h; t <= t_max; t += h) {
        node(t, sum);
        node(-t, sum);
    }
    Real estimate = sum * h;
    for (std::size_t level = 1; level <= max_levels; ++level) {
        h /= 2;
        Real added = 0;
        for (Real t = h; t <= t_max; t += 2 * h) {
            node(t, added);
            node(-t, added);
        }
        sum += added;
        const Real next = sum * h;
        const Real diff = abs(next - estimate);
        estimate = next;
        if (!(boost::math::isfinite)(estimate))
            throw NumericalFailure("tanh-sinh: non-finite integrand values");
        res.value = estimate;
        res.error_estimate = diff;
        if (level >= 3 && diff <= tol) {
            res.converged = edge <= tol;
            return res;
        }
    }
    return res;
}

} // namespace sptree::quadrature
