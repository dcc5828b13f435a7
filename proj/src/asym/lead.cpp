#include "sptree/asym.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sptree/error.hpp"
#include "sptree/specfun.hpp"

namespace sptree::asym {

std::string to_string(LeadMethod m) {
    switch (m) {
    case LeadMethod::mellin_bessel: return "mellin_bessel";
    case LeadMethod::log_sin_closed_form: return "log_sin_closed_form";
    case LeadMethod::arccosh_closed_form: return "arccosh_closed_form";
    }
    return "unknown";
}

void validate_generators(const std::vector<std::int64_t>& generators) {
    if (generators.empty()) throw InvalidArgument("empty generator set");
    if (generators.front() != 1) throw InvalidArgument("first generator must be 1");
    if (!std::is_sorted(generators.begin(), generators.end()))
        throw InvalidArgument("generators must be sorted");
}

namespace {

quadrature::QuadratureConfig mellin_config() {
    quadrature::QuadratureConfig cfg;
    cfg.abs_tol = 1e-11;
    cfg.rel_tol = 1e-12;
    return cfg;
}

} // namespace

LeadTerm lead_term_mellin(const std::vector<std::int64_t>& generators) {
    validate_generators(generators);
    auto g = [&](double t) {
        return std::exp(-t) - specfun::bessel_multi_scaled(generators, 0, 2.0 * t);
    };
    const auto r = quadrature::integrate_mellin(g, mellin_config());
    return LeadTerm{r.value, LeadMethod::mellin_bessel, r.error_estimate, std::nullopt, 0.0};
}

LeadTerm lead_term_log_sin(const std::vector<std::int64_t>& generators) {
    validate_generators(generators);
    // The integrand is symmetric about w = 1/2 and singular only at w = 0.
    auto h = [&](double w) {
        double s = 0.0;
        for (auto g : generators) {
            const double v = std::sin(std::numbers::pi * static_cast<double>(g) * w);
            s += v * v;
        }
        return std::log(s);
    };
    const auto r = quadrature::integrate_log_endpoint(h, 1e-13, 0.0, 0.5);
    return LeadTerm{std::log(4.0) + 2.0 * r.value, LeadMethod::log_sin_closed_form,
                    2.0 * r.error_estimate, std::nullopt, 0.0};
}

LeadTerm lead_term_circulant(const std::vector<std::int64_t>& generators) {
    LeadTerm b = lead_term_log_sin(generators);
    const LeadTerm a = lead_term_mellin(generators);
    const double gap = std::abs(a.value - b.value);
    const double allowed = 10.0 * (a.error_estimate + b.error_estimate) + 1e-10;
    if (gap > allowed) {
        std::ostringstream os;
        os.precision(17);
        os << "lead_term_circulant: routes disagree (mellin " << a.value << ", log-sine "
           << b.value << ", gap " << gap << ")";
        throw NumericalFailure(os.str());
    }
    b.cross_check = a.value;
    b.cross_error = a.error_estimate;
    return b;
}

double arccosh_lead(double x) {
    if (!(x >= 2.0)) throw InvalidArgument("arccosh_lead: x must be >= 2");
    if (std::isinf(x)) return x;
    // log1p form keeps accuracy near x = 2.
    const double e = x - 2.0;
    return std::log1p(0.5 * (e + std::sqrt(e * (x + 2.0))));
}

LeadTerm c_d(int d) {
    if (d < 1) throw InvalidArgument("c_d: d must be >= 1");
    auto g = [d](double t) {
        return std::exp(-t) - std::pow(specfun::bessel_i_scaled(0, 2.0 * t), d);
    };
    const auto r = quadrature::integrate_mellin(g, mellin_config());
    return LeadTerm{r.value, LeadMethod::mellin_bessel, r.error_estimate, std::nullopt, 0.0};
}

LeadTerm torus_lead_integral(int q, double lambda) {
    if (q < 1) throw InvalidArgument("torus_lead_integral: q must be >= 1");
    if (!(lambda >= 0.0)) throw InvalidArgument("torus_lead_integral: lambda must be >= 0");
    if (q == 1)
        return LeadTerm{arccosh_lead(2.0 + lambda), LeadMethod::arccosh_closed_form, 0.0,
                        std::nullopt, 0.0};
    auto g = [q, lambda](double t) {
        const double b = specfun::bessel_i_scaled(0, 2.0 * t);
        return std::exp(-t) - std::pow(b, q) * std::exp(-lambda * t);
    };
    const auto r = quadrature::integrate_mellin(g, mellin_config());
    return LeadTerm{r.value, LeadMethod::mellin_bessel, r.error_estimate, std::nullopt, 0.0};
}

} // namespace sptree::asym
