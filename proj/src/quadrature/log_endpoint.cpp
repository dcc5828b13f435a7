#include "sptree/quadrature.hpp"

#include <cmath>
#include <limits>

#include "sptree/tanh_sinh.hpp"

namespace sptree::quadrature {

IntegralResult integrate_log_endpoint(const Integrand& h, double tol, double a, double b) {
    if (!(tol > 0.0)) throw InvalidArgument("log_endpoint: tolerance must be positive");
    if (!(b > a)) throw InvalidArgument("log_endpoint: empty interval");
    auto r = tanh_sinh<double>(h, a, b, tol, std::numeric_limits<double>::epsilon());
    IntegralResult res{r.value, r.error_estimate, r.evaluations};
    if (!r.converged)
        throw QuadratureError("log_endpoint: no convergence; the integrand may have a "
                              "non-integrable singularity",
                              res);
    return res;
}

} // namespace sptree::quadrature
