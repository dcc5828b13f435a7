#include "sptree/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "sptree/asym.hpp"
#include "sptree/asym_mp.hpp"
#include "sptree/error.hpp"

namespace sptree::cli {

std::int64_t a_n_value(AnRule rule, std::int64_t n, std::int64_t constant) {
    switch (rule) {
    case AnRule::floor_sqrt: {
        auto a = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
        while (a * a > n) --a;
        while ((a + 1) * (a + 1) <= n) ++a;
        return std::max<std::int64_t>(a, 1);
    }
    case AnRule::floor_log:
        return std::max<std::int64_t>(
            static_cast<std::int64_t>(std::floor(std::log(static_cast<double>(n)))), 1);
    case AnRule::constant:
        return constant;
    }
    return 1;
}

AnRule parse_an_rule(const std::string& text) {
    if (text == "floor_sqrt") return AnRule::floor_sqrt;
    if (text == "floor_log") return AnRule::floor_log;
    if (text == "constant") return AnRule::constant;
    throw InvalidArgument("unknown a_n rule '" + text + "' (floor_sqrt, floor_log, constant)");
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}

std::string rule_name(AnRule r) {
    switch (r) {
    case AnRule::floor_sqrt: return "floor_sqrt";
    case AnRule::floor_log: return "floor_log";
    case AnRule::constant: return "constant";
    }
    return "";
}

Decimal decimal_from_precise(const asym::PreciseResidual& r) {
    mp::PrecisionScope scope(40);
    const mp::Real x(r.residual_text);
    return Decimal::from_text(x.str(17, std::ios::scientific));
}

// Family-level constants computed once for all n.
struct Prepared {
    double lead = 0.0;
    asym::TorusConstantTerms constant_terms;
    asym::TorusSublinearTerms sublinear_terms;
};

CompareRow compute_row(const CompareRequest& req, const Prepared& prep, std::int64_t n) {
    CompareRow row;
    row.n = n;
    graphs::GraphSpec spec;
    asym::AsymptoticReport report;
    bool precise_supported = false;
    using Family = CompareRequest::Family;
    switch (req.family) {
    case Family::circulant:
        row.family = "circulant";
        row.params = "gamma=" + join(req.generators);
        spec = graphs::CirculantSpec::make(n, req.generators);
        report = asym::predict_circulant(n, req.generators, prep.lead);
        precise_supported = true;
        break;
    case Family::torus_constant: {
        row.family = "torus-constant";
        row.params = "alpha=" + join(req.alpha) + ";beta=" + join(req.beta);
        std::vector<std::int64_t> sides = req.alpha;
        for (auto b : req.beta) sides.push_back(b * n);
        spec = graphs::TorusSpec::make(sides, req.alpha.size());
        report = asym::predict_torus_constant(n, prep.constant_terms);
        precise_supported = req.beta.size() == 1;
        break;
    }
    case Family::torus_sublinear: {
        const std::int64_t a = a_n_value(req.rule, n, req.rule_constant);
        row.family = "torus-sublinear";
        row.params = "alpha=" + join(req.alpha) + ";beta=" + join(req.beta) +
                     ";rule=" + rule_name(req.rule) + ";a_n=" + std::to_string(a);
        std::vector<std::int64_t> sides;
        for (auto x : req.alpha) sides.push_back(x * a);
        for (auto b : req.beta) sides.push_back(b * n);
        spec = graphs::TorusSpec::make(sides, req.alpha.size());
        report = asym::predict_torus_sublinear(n, a, prep.sublinear_terms);
        break;
    }
    }
    row.predicted_log_det = report.predicted_log_det;

    const auto nv = static_cast<std::uint64_t>(graphs::vertex_count(spec));
    if (nv <= req.enumeration_cap) {
        const double exact = graphs::log_det_star(graphs::spectrum(spec, req.enumeration_cap));
        row.exact_log_det = exact;
        if (precise_supported && nv <= req.precise_cap) {
            asym::EscalationPolicy policy;
            policy.start_digits = req.start_digits;
            policy.agreement = req.agreement;
            const auto precise = req.family == Family::circulant
                                     ? asym::residual_circulant_mp(n, req.generators, policy)
                                     : asym::residual_torus_constant_mp(n, req.alpha, req.beta[0], policy);
            row.residual = decimal_from_precise(precise);
        } else {
            row.residual = Decimal::from_double(exact - report.predicted_log_det);
        }
    }
    if (nv <= req.max_vertices) row.tree_count = graphs::spanning_tree_count_exact(spec, req.max_vertices).to_string();
    return row;
}

} // namespace

std::vector<CompareRow> cmd_compare(const CompareRequest& req) {
    if (req.n_values.empty()) throw InvalidArgument("compare: no n values");
    Prepared prep;
    using Family = CompareRequest::Family;
    switch (req.family) {
    case Family::circulant:
        prep.lead = asym::lead_term_circulant(req.generators).value;
        break;
    case Family::torus_constant:
        prep.constant_terms = asym::torus_constant_terms(req.alpha, req.beta);
        break;
    case Family::torus_sublinear:
        prep.sublinear_terms = asym::torus_sublinear_terms(req.alpha, req.beta);
        break;
    }

    std::vector<std::int64_t> ns = req.n_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<CompareRow> rows(ns.size());
    std::vector<std::exception_ptr> errors(ns.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ns.size(); i = next++) {
            try {
                rows[i] = compute_row(req, prep, ns[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(req.jobs, static_cast<unsigned>(ns.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

} // namespace sptree::cli
