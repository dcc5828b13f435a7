#pragma once

// Lead-term integrals, Epstein zeta values, regularized determinants of real
// tori and the large-n predictions for log det* of circulants and tori.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sptree/quadrature.hpp"

namespace sptree::asym {

enum class LeadMethod { mellin_bessel, log_sin_closed_form, arccosh_closed_form };

std::string to_string(LeadMethod m);

struct LeadTerm {
    double value = 0.0;
    LeadMethod method = LeadMethod::log_sin_closed_form;
    double error_estimate = 0.0;
    // Value and error of the independent route, when one was run.
    std::optional<double> cross_check;
    double cross_error = 0.0;
};

// Route (a): Mellin integral of e^{-t} - e^{-2dt} I_0^Gamma(2t).
LeadTerm lead_term_mellin(const std::vector<std::int64_t>& generators);
// Route (b): log 4 + int_0^1 log(sum_g sin^2(pi g w)) dw.
LeadTerm lead_term_log_sin(const std::vector<std::int64_t>& generators);
// Runs both routes; returns route (b) with route (a) as the cross-check and
// throws NumericalFailure when they disagree beyond their combined errors.
LeadTerm lead_term_circulant(const std::vector<std::int64_t>& generators);

// log((x + sqrt(x^2 - 4)) / 2) = arccosh(x/2) for x >= 2.
double arccosh_lead(double x);

// int_0^inf (e^{-t} - (e^{-2t} I_0(2t))^d) dt/t.
LeadTerm c_d(int d);

// int_0^inf (e^{-t} - (e^{-2t} I_0(2t))^q e^{-lambda t}) dt/t; the closed form
// arccosh_lead(2 + lambda) is used when q = 1.
LeadTerm torus_lead_integral(int q, double lambda);

struct EpsteinValue {
    std::vector<double> sides;
    double s = 0.0;
    double value = 0.0;
    double tail_bound = 0.0;
};

// (4 pi^2)^{-s} sum_{k != 0} (sum_i k_i^2 / sides_i^2)^{-s}, for s > r/2.
EpsteinValue epstein_zeta_sum(const std::vector<double>& sides, double s);

// zeta'(0) of R^r / diag(sides) Z^r via the theta split at `split`.
double epstein_zeta_prime_zero(const std::vector<double>& sides, double split = 1.0);

struct Component {
    std::string label;
    double value = 0.0;
};

struct AsymptoticReport {
    std::int64_t n = 0;
    double predicted_log_det = 0.0;
    std::optional<double> exact_log_det;
    std::optional<double> residual;
    std::vector<Component> components;

    // Sets exact_log_det and residual = exact - predicted.
    void attach_exact(double exact);
};

// n I + 2 log n - log c_Gamma.
AsymptoticReport predict_circulant(std::int64_t n, const std::vector<std::int64_t>& generators);
AsymptoticReport predict_circulant(std::int64_t n, const std::vector<std::int64_t>& generators,
                                   double lead);

// Per-family constants that do not depend on n.
struct TorusConstantTerms {
    double lead_sum = 0.0;   // sum over the A-block eigenvalues of the lead integral
    double zeta_prime = 0.0; // zeta'(0) of R^{d-p} / B Z^{d-p}
    double det_b = 1.0;
    int q = 0;               // d - p
};
TorusConstantTerms torus_constant_terms(const std::vector<std::int64_t>& alpha,
                                        const std::vector<std::int64_t>& beta);

// n^{d-p} det(B) sum_j L(lambda_j) + 2 log n - zeta'_B(0).
AsymptoticReport predict_torus_constant(std::int64_t n, const std::vector<std::int64_t>& alpha,
                                        const std::vector<std::int64_t>& beta);
AsymptoticReport predict_torus_constant(std::int64_t n, const TorusConstantTerms& terms);

struct TorusSublinearTerms {
    double c_d = 0.0;
    double epstein = 0.0;   // zeta of R^p / A^{-1} Z^p at d/2
    double det_lambda = 1.0;
    double prefactor = 0.0; // det(Lambda) (4 pi)^{d/2} Gamma(d/2) zeta
    int p = 0;
    int q = 0;
};
TorusSublinearTerms torus_sublinear_terms(const std::vector<std::int64_t>& alpha,
                                          const std::vector<std::int64_t>& beta);

// n^{d-p} a_n^p det(Lambda) c_d - (n/a_n)^{d-p} det(Lambda) (4pi)^{d/2} Gamma(d/2) zeta(d/2).
AsymptoticReport predict_torus_sublinear(std::int64_t n, std::int64_t a_n,
                                         const std::vector<std::int64_t>& alpha,
                                         const std::vector<std::int64_t>& beta);
AsymptoticReport predict_torus_sublinear(std::int64_t n, std::int64_t a_n,
                                         const TorusSublinearTerms& terms);

// Validates a generator list the way CirculantSpec does, without an n.
void validate_generators(const std::vector<std::int64_t>& generators);

} // namespace sptree::asym
