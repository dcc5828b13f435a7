#include "sptree/asym_mp.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "sptree/asym.hpp"
#include "sptree/error.hpp"
#include "sptree/graphs_mp.hpp"
#include "sptree/tanh_sinh.hpp"

namespace sptree::asym {

using mp::Real;

namespace {

Real pow10(long e) { return pow(Real(10), Real(e)); }

} // namespace

mp::Real lead_term_circulant_mp(const std::vector<std::int64_t>& generators) {
    validate_generators(generators);
    static std::mutex cache_mutex;
    static std::map<std::pair<std::vector<std::int64_t>, unsigned>, Real> cache;
    const unsigned digits = Real::default_precision();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({generators, digits});
        if (it != cache.end()) return it->second;
    }
    const Real pi = mp::pi();
    auto h = [&](const Real& w) {
        Real s = 0;
        for (auto g : generators) {
            Real v = sin(pi * Real(g) * w);
            s += v * v;
        }
        return Real(log(s));
    };
    const Real eps = pow10(-static_cast<long>(digits));
    const Real tol = pow10(-static_cast<long>(digits) + 8);
    auto r = quadrature::tanh_sinh<Real>(h, Real(0), Real(0.5), tol, eps, 16);
    if (!r.converged)
        throw NumericalFailure("lead_term_circulant_mp: tanh-sinh did not converge at " +
                               std::to_string(digits) + " digits");
    Real value = 2 * mp::log2() + 2 * r.value;
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(generators, digits), value);
    return value;
}

mp::Real arccosh_lead_mp(const mp::Real& x) {
    if (x < 2) throw InvalidArgument("arccosh_lead_mp: x must be >= 2");
    return log((x + sqrt(x * x - 4)) / 2);
}

PreciseResidual escalate(const std::function<std::pair<mp::Real, mp::Real>()>& evaluate,
                         const EscalationPolicy& policy) {
    // Residuals are carried as decimal strings so the comparison between
    // precisions never passes through double.
    auto run = [&](unsigned digits, PreciseResidual& out, std::string& full) {
        mp::PrecisionScope scope(digits);
        auto [exact, predicted] = evaluate();
        const Real r = exact - predicted;
        full = r.str(40, std::ios::scientific);
        out.residual = static_cast<double>(r);
        out.sign = r > 0 ? 1 : (r < 0 ? -1 : 0);
        out.log10_abs_residual = out.sign == 0 ? -std::numeric_limits<double>::infinity()
                                               : static_cast<double>(log10(abs(r)));
        out.residual_text = r.str(25, std::ios::scientific);
        out.exact_log_det = static_cast<double>(exact);
        out.predicted_log_det = static_cast<double>(predicted);
        out.digits = digits;
    };
    auto agree = [&](const std::string& a, const std::string& b) {
        mp::PrecisionScope scope(60);
        const Real x(a), y(b);
        return abs(x - y) <= Real(policy.agreement) * abs(y);
    };
    unsigned digits = std::max(policy.start_digits, 20u);
    PreciseResidual prev, cur;
    std::string prev_full, cur_full;
    run(digits, prev, prev_full);
    while (2 * digits <= policy.max_digits) {
        digits *= 2;
        run(digits, cur, cur_full);
        if (cur.sign != 0 && agree(prev_full, cur_full)) return cur;
        prev = cur;
        prev_full = cur_full;
    }
    // Both precisions see only roundoff: the residual is below the resolution
    // of the coarser one and is reported as computed.
    if (prev.sign == 0 || prev.log10_abs_residual <= -static_cast<double>(digits / 2) + 20.0)
        return prev;
    throw NumericalFailure("residual did not stabilise up to " + std::to_string(digits) +
                           " digits");
}

PreciseResidual residual_circulant_mp(std::int64_t n, const std::vector<std::int64_t>& generators,
                                      const EscalationPolicy& policy) {
    const graphs::GraphSpec spec = graphs::CirculantSpec::make(n, generators);
    std::int64_t c = 0;
    for (auto g : generators) c += g * g;
    return escalate(
        [&] {
            const Real exact = graphs::log_det_star_mp(spec);
            const Real predicted =
                Real(n) * lead_term_circulant_mp(generators) + 2 * log(Real(n)) - log(Real(c));
            return std::make_pair(exact, predicted);
        },
        policy);
}

PreciseResidual residual_torus_constant_mp(std::int64_t n, const std::vector<std::int64_t>& alpha,
                                           std::int64_t beta, const EscalationPolicy& policy) {
    if (beta < 1 || n < 1) throw InvalidArgument("residual_torus_constant_mp: n, beta must be >= 1");
    std::vector<std::int64_t> sides = alpha;
    sides.push_back(beta * n);
    const graphs::GraphSpec spec = graphs::TorusSpec::make(sides);
    return escalate(
        [&] {
            const Real exact = graphs::log_det_star_mp(spec);
            const Real pi = mp::pi();
            // Constant-block eigenvalues, mixed radix over alpha.
            Real lead = 0;
            std::vector<std::int64_t> idx(alpha.size(), 0);
            for (;;) {
                Real lambda = 0;
                for (std::size_t i = 0; i < alpha.size(); ++i) {
                    Real s = sin(pi * Real(idx[i]) / Real(alpha[i]));
                    lambda += 4 * s * s;
                }
                lead += arccosh_lead_mp(2 + lambda);
                std::size_t i = 0;
                for (; i < alpha.size(); ++i) {
                    if (++idx[i] < alpha[i]) break;
                    idx[i] = 0;
                }
                if (i == alpha.size()) break;
            }
            const Real predicted = Real(n) * Real(beta) * lead + 2 * log(Real(n)) +
                                   2 * log(Real(beta));
            return std::make_pair(exact, predicted);
        },
        policy);
}

} // namespace sptree::asym
