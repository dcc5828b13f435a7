#include "sptree/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace sptree::quadrature {

IntegralResult integrate_periodic(const Integrand& f, double tol, std::size_t min_points) {
    if (!(tol > 0.0)) throw InvalidArgument("periodic: tolerance must be positive");
    constexpr std::size_t kMaxPoints = std::size_t{1} << 22;
    std::size_t n = 8;
    while (n < min_points) n *= 2;

    const double two_pi = 2.0 * std::numbers::pi;
    IntegralResult res;
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        sum += f(-std::numbers::pi + two_pi * static_cast<double>(j) / static_cast<double>(n));
    res.evaluations = n;
    double estimate = sum / static_cast<double>(n);
    int quiet = 0;
    while (n < kMaxPoints) {
        // Midpoints of the current grid complete the doubled grid.
        double mid = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            mid += f(-std::numbers::pi +
                     two_pi * (static_cast<double>(j) + 0.5) / static_cast<double>(n));
        res.evaluations += n;
        sum += mid;
        n *= 2;
        const double next = sum / static_cast<double>(n);
        const double diff = std::abs(next - estimate);
        estimate = next;
        if (!std::isfinite(estimate)) throw NumericalFailure("periodic: non-finite integrand");
        // Two quiet doublings in a row guard against aliasing on coarse grids.
        quiet = diff <= tol ? quiet + 1 : 0;
        if (quiet >= 2) {
            res.value = estimate;
            res.error_estimate = diff;
            return res;
        }
    }
    throw QuadratureError("periodic: trapezoid rule did not converge", {estimate, tol, res.evaluations});
}

} // namespace sptree::quadrature
