#include "sptree/asym.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "sptree/error.hpp"
#include "sptree/graphs.hpp"
#include "sptree/specfun.hpp"

namespace sptree::asym {

void AsymptoticReport::attach_exact(double exact) {
    exact_log_det = exact;
    residual = exact - predicted_log_det;
}

namespace {

AsymptoticReport assemble(std::int64_t n, std::vector<Component> parts) {
    AsymptoticReport rep;
    rep.n = n;
    for (const auto& c : parts) rep.predicted_log_det += c.value;
    rep.components = std::move(parts);
    return rep;
}

void check_positive(const std::vector<std::int64_t>& v, const char* what) {
    for (auto x : v)
        if (x < 1) throw InvalidArgument(std::string(what) + " entries must be positive");
}

} // namespace

AsymptoticReport predict_circulant(std::int64_t n, const std::vector<std::int64_t>& generators) {
    return predict_circulant(n, generators, lead_term_circulant(generators).value);
}

AsymptoticReport predict_circulant(std::int64_t n, const std::vector<std::int64_t>& generators,
                                   double lead) {
    validate_generators(generators);
    if (n < 2) throw InvalidArgument("predict_circulant: n must be >= 2");
    std::int64_t c = 0;
    for (auto g : generators) c += g * g;
    const double nd = static_cast<double>(n);
    return assemble(n, {{"lead", nd * lead},
                        {"2log_n", 2.0 * std::log(nd)},
                        {"-log_c_gamma", -std::log(static_cast<double>(c))}});
}

TorusConstantTerms torus_constant_terms(const std::vector<std::int64_t>& alpha,
                                        const std::vector<std::int64_t>& beta) {
    if (beta.empty()) throw InvalidArgument("torus-constant: beta must be non-empty");
    check_positive(alpha, "alpha");
    check_positive(beta, "beta");
    TorusConstantTerms terms;
    terms.q = static_cast<int>(beta.size());
    std::vector<double> bsides;
    for (auto b : beta) {
        terms.det_b *= static_cast<double>(b);
        bsides.push_back(static_cast<double>(b));
    }
    // Eigenvalues of the constant block; equal values share one integral.
    std::map<double, int> multiplicity;
    if (alpha.empty()) {
        multiplicity[0.0] = 1;
    } else {
        const auto sp = graphs::torus_spectrum(graphs::TorusSpec::make(alpha));
        for (double lambda : sp.eigenvalues) ++multiplicity[lambda];
    }
    for (const auto& [lambda, mult] : multiplicity)
        terms.lead_sum += mult * torus_lead_integral(terms.q, lambda).value;
    terms.zeta_prime = epstein_zeta_prime_zero(bsides);
    return terms;
}

AsymptoticReport predict_torus_constant(std::int64_t n, const std::vector<std::int64_t>& alpha,
                                        const std::vector<std::int64_t>& beta) {
    return predict_torus_constant(n, torus_constant_terms(alpha, beta));
}

AsymptoticReport predict_torus_constant(std::int64_t n, const TorusConstantTerms& terms) {
    if (n < 1) throw InvalidArgument("predict_torus_constant: n must be >= 1");
    const double nd = static_cast<double>(n);
    return assemble(n, {{"lead", std::pow(nd, terms.q) * terms.det_b * terms.lead_sum},
                        {"2log_n", 2.0 * std::log(nd)},
                        {"-zeta_prime_0", -terms.zeta_prime}});
}

TorusSublinearTerms torus_sublinear_terms(const std::vector<std::int64_t>& alpha,
                                          const std::vector<std::int64_t>& beta) {
    if (alpha.empty())
        throw InvalidArgument("torus-sublinear: p = 0 has no slowly growing block");
    if (beta.empty()) throw InvalidArgument("torus-sublinear: beta must be non-empty");
    check_positive(alpha, "alpha");
    check_positive(beta, "beta");
    TorusSublinearTerms terms;
    terms.p = static_cast<int>(alpha.size());
    terms.q = static_cast<int>(beta.size());
    const int d = terms.p + terms.q;
    std::vector<double> inverse;
    for (auto a : alpha) {
        terms.det_lambda *= static_cast<double>(a);
        inverse.push_back(1.0 / static_cast<double>(a));
    }
    for (auto b : beta) terms.det_lambda *= static_cast<double>(b);
    terms.c_d = c_d(d).value;
    terms.epstein = epstein_zeta_sum(inverse, 0.5 * d).value;
    terms.prefactor = terms.det_lambda * std::pow(4.0 * std::numbers::pi, 0.5 * d) *
                      specfun::gamma_half(d) * terms.epstein;
    return terms;
}

AsymptoticReport predict_torus_sublinear(std::int64_t n, std::int64_t a_n,
                                         const std::vector<std::int64_t>& alpha,
                                         const std::vector<std::int64_t>& beta) {
    return predict_torus_sublinear(n, a_n, torus_sublinear_terms(alpha, beta));
}

AsymptoticReport predict_torus_sublinear(std::int64_t n, std::int64_t a_n,
                                         const TorusSublinearTerms& terms) {
    if (n < 1 || a_n < 1) throw InvalidArgument("predict_torus_sublinear: n and a_n must be >= 1");
    const double nd = static_cast<double>(n), ad = static_cast<double>(a_n);
    const double lead = std::pow(nd, terms.q) * std::pow(ad, terms.p) * terms.det_lambda * terms.c_d;
    const double second = std::pow(nd / ad, terms.q) * terms.prefactor;
    return assemble(n, {{"lead", lead}, {"-second_order", -second}});
}

} // namespace sptree::asym
