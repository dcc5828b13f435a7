#pragma once

// High-precision residuals. Exponentially small residuals are invisible in
// double precision; these routines evaluate every term in MPFR and raise the
// working precision until two precisions agree.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sptree/mp.hpp"

namespace sptree::asym {

// Lead term via the log-sine integral at the current working precision.
mp::Real lead_term_circulant_mp(const std::vector<std::int64_t>& generators);

mp::Real arccosh_lead_mp(const mp::Real& x);

struct PreciseResidual {
    // Rounded to double; underflows to 0 below ~1e-308, so compare magnitudes
    // through log10_abs_residual and sign.
    double residual = 0.0;
    double log10_abs_residual = 0.0;
    int sign = 0;
    // 25 significant digits in scientific notation.
    std::string residual_text;
    double exact_log_det = 0.0;
    double predicted_log_det = 0.0;
    unsigned digits = 0;
};

struct EscalationPolicy {
    unsigned start_digits = 40;
    unsigned max_digits = 1600;
    // Accept when two precisions agree to this relative tolerance.
    double agreement = 1e-6;
};

// log det* - (n I + 2 log n - log c_Gamma).
PreciseResidual residual_circulant_mp(std::int64_t n, const std::vector<std::int64_t>& generators,
                                      const EscalationPolicy& policy = {});

// Torus Z^p/A x Z/(beta n) with a single growing side:
// log det* - (n beta sum_j arccosh((2 + lambda_j)/2) + 2 log n + 2 log beta).
PreciseResidual residual_torus_constant_mp(std::int64_t n, const std::vector<std::int64_t>& alpha,
                                           std::int64_t beta,
                                           const EscalationPolicy& policy = {});

// Generic driver: evaluate(digits) returns {exact, predicted} at that working
// precision (inside a PrecisionScope).
PreciseResidual escalate(const std::function<std::pair<mp::Real, mp::Real>()>& evaluate,
                         const EscalationPolicy& policy);

} // namespace sptree::asym
