#include "sptree/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>

#include "sptree/asym.hpp"
#include "sptree/error.hpp"

namespace sptree::cli {

namespace {

// log tau - log(n/beta) = sum_k log(2 cosh(n J_k) + alpha_k), with alpha_k = alpha_{beta-k}.
struct AlphaModel : Eigen::DenseFunctor<double> {
    std::vector<double> n, y, J;
    std::vector<int> slot;  // unknown index for each k = 1..beta-1

    AlphaModel(int unknowns, int observations) : Eigen::DenseFunctor<double>(unknowns, observations) {}

    int operator()(const InputType& a, ValueType& f) const {
        for (std::size_t i = 0; i < n.size(); ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < J.size(); ++k) {
                const double arg = 2.0 * std::cosh(n[i] * J[k]) + a[slot[k]];
                // Outside the domain: a large residual steers the step back.
                s += arg > 0.0 ? std::log(arg) : -1e3 + arg;
            }
            f[static_cast<Eigen::Index>(i)] = s - y[i];
        }
        return 0;
    }

    int df(const InputType& a, JacobianType& jac) const {
        jac.setZero();
        for (std::size_t i = 0; i < n.size(); ++i)
            for (std::size_t k = 0; k < J.size(); ++k) {
                const double arg = 2.0 * std::cosh(n[i] * J[k]) + a[slot[k]];
                jac(static_cast<Eigen::Index>(i), slot[k]) += arg > 0.0 ? 1.0 / arg : 1.0;
            }
        return 0;
    }
};

std::optional<std::string> match_candidate(double v, std::int64_t beta, double tol) {
    const double s5 = std::sqrt(5.0);
    struct Cand {
        std::string label;
        double value;
    };
    std::vector<Cand> cands = {{"(1-sqrt5)/2", 0.5 * (1.0 - s5)}, {"(1+sqrt5)/2", 0.5 * (1.0 + s5)}};
    for (int i = -4; i <= 4; ++i) cands.push_back({std::to_string(i), static_cast<double>(i)});
    for (std::int64_t j = 0; j < beta; ++j)
        cands.push_back({"2cos(2pi*" + std::to_string(j) + "/" + std::to_string(beta) + ")",
                         2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                        static_cast<double>(beta))});
    for (const auto& c : cands)
        if (std::abs(v - c.value) <= tol) return c.label;
    return std::nullopt;
}

} // namespace

AlphaFit cmd_estimate_alpha(std::int64_t beta, const std::vector<std::int64_t>& n_values,
                            double candidate_tol, std::size_t max_vertices) {
    if (beta < 2) throw InvalidArgument("estimate-alpha: beta must be >= 2");
    std::vector<std::int64_t> ns = n_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (static_cast<std::int64_t>(ns.size()) < beta)
        throw InvalidArgument("estimate-alpha: need at least beta distinct n values");
    if (ns.front() < 2) throw InvalidArgument("estimate-alpha: n must be >= 2");

    const int unknowns = static_cast<int>(beta / 2);
    AlphaModel model(unknowns, static_cast<int>(ns.size()));
    for (std::int64_t k = 1; k < beta; ++k) {
        const double c = std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(beta));
        model.J.push_back(asym::arccosh_lead(4.0 - 2.0 * c));
        model.slot.push_back(static_cast<int>(std::min(k, beta - k) - 1));
    }
    for (auto n : ns) {
        const auto tau = graphs::spanning_tree_count_exact(
            graphs::CirculantSpec::make(beta * n, {1, n}), max_vertices);
        model.n.push_back(static_cast<double>(n));
        model.y.push_back(tau.log() - std::log(static_cast<double>(n) / static_cast<double>(beta)));
    }

    Eigen::VectorXd a = Eigen::VectorXd::Zero(unknowns);
    Eigen::LevenbergMarquardt<AlphaModel> lm(model);
    lm.setXtol(1e-15);
    lm.setFtol(1e-15);
    lm.setMaxfev(2000);
    const auto status = lm.minimize(a);
    if (status == Eigen::LevenbergMarquardtSpace::ImproperInputParameters ||
        !a.allFinite())
        throw NumericalFailure("estimate-alpha: fit diverged (status " +
                               std::to_string(static_cast<int>(status)) + ")");

    AlphaFit fit;
    fit.beta = beta;
    fit.iterations = static_cast<int>(lm.iterations());
    Eigen::VectorXd f(ns.size());
    model(a, f);
    fit.residual_norm = f.norm();
    for (std::int64_t k = 1; k < beta; ++k) {
        ConjectureTerm t;
        t.k = k;
        t.J = model.J[static_cast<std::size_t>(k - 1)];
        t.alpha = a[model.slot[static_cast<std::size_t>(k - 1)]];
        t.candidate = match_candidate(t.alpha, beta, candidate_tol);
        fit.terms.push_back(t);
    }
    fit.note = "alpha_k and alpha_{beta-k} share J_k and are fitted as one unknown";
    if (beta >= 7) fit.note += "; exploratory, no reference values";
    return fit;
}

} // namespace sptree::cli
