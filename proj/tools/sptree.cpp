// sptree: spanning-tree counts, spectra and asymptotic comparisons for
// circulant graphs and discrete tori.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sptree/cli.hpp"
#include "sptree/error.hpp"

namespace {

using sptree::cli::format_double;
using json = nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kNumerical = 2, kCap = 3 };

struct Globals {
    std::string format = "csv";
    double tol = 1e-6;
    unsigned precision = 40;
    unsigned jobs = 1;
    std::size_t max_vertices = sptree::graphs::kDefaultDeterminantCap;
    bool no_header = false;
};

std::string timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void header(const Globals& g, const std::string& command) {
    if (!g.no_header && g.format == "csv") std::cout << "# sptree " << command << " generated " << timestamp() << '\n';
}

void emit_json(const Globals& g, const std::string& command, json body) {
    json out = {{"command", command}, {"result", std::move(body)}};
    if (!g.no_header) out["generated"] = timestamp();
    std::cout << out.dump(2) << '\n';
}

// Parses "a:b[:step]" or "a,b,c".
std::vector<std::int64_t> parse_n_values(const std::string& text) {
    if (text.find(':') == std::string::npos) return sptree::graphs::parse_int_list(text);
    std::vector<std::int64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(std::stoll(item));
    if (parts.size() < 2 || parts.size() > 3) throw sptree::InvalidArgument("bad range '" + text + "'");
    const std::int64_t step = parts.size() == 3 ? parts[2] : 1;
    if (step < 1) throw sptree::InvalidArgument("range step must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
    return out;
}

struct SpecOptions {
    std::vector<std::string> circulant;
    std::string torus;

    sptree::graphs::GraphSpec build() const {
        if (!circulant.empty() == !torus.empty())
            throw sptree::InvalidArgument("give exactly one of --circulant N G1,G2,... or --torus L1,L2,...");
        if (!circulant.empty())
            return sptree::graphs::CirculantSpec::make(std::stoll(circulant[0]),
                                                       sptree::graphs::parse_int_list(circulant[1]));
        return sptree::graphs::TorusSpec::make(sptree::graphs::parse_int_list(torus));
    }
};

void add_spec_options(CLI::App* cmd, SpecOptions& spec) {
    cmd->add_option("--circulant", spec.circulant, "Circulant graph: N G1,G2,...")->expected(2);
    cmd->add_option("--torus", spec.torus, "Discrete torus sides: L1,L2,...");
}

void run_count(const Globals& g, const SpecOptions& opts) {
    const auto spec = opts.build();
    const auto tc = sptree::graphs::spanning_tree_count_exact(spec, g.max_vertices);
    if (g.format == "json") {
        emit_json(g, "count", {{"spec", sptree::graphs::describe(spec)}, {"tree_count", tc.to_string()}});
        return;
    }
    header(g, "count");
    std::cout << tc.to_string() << '\n';
}

void run_spectrum(const Globals& g, const SpecOptions& opts) {
    const auto spec = opts.build();
    const auto sp = sptree::graphs::spectrum(spec);
    if (g.format == "json") {
        emit_json(g, "spectrum", {{"spec", sptree::graphs::describe(spec)},
                                  {"zero_multiplicity", sp.zero_multiplicity},
                                  {"eigenvalues", sp.eigenvalues}});
        return;
    }
    header(g, "spectrum");
    std::cout << "j,eigenvalue\n";
    for (std::size_t j = 0; j < sp.eigenvalues.size(); ++j)
        std::cout << j << ',' << format_double(sp.eigenvalues[j]) << '\n';
}

struct CompareOptions {
    std::string family = "circulant";
    std::string generators, alpha, beta;
    std::string rule = "floor_sqrt";
    std::int64_t a_const = 1;
    std::string n_values;
};

void run_compare(const Globals& g, const CompareOptions& o) {
    using sptree::cli::CompareRequest;
    CompareRequest req;
    if (o.family == "circulant") {
        req.family = CompareRequest::Family::circulant;
        req.generators = sptree::graphs::parse_int_list(o.generators.empty() ? "1" : o.generators);
    } else if (o.family == "torus-constant" || o.family == "torus-sublinear") {
        req.family = o.family == "torus-constant" ? CompareRequest::Family::torus_constant
                                                  : CompareRequest::Family::torus_sublinear;
        if (!o.alpha.empty()) req.alpha = sptree::graphs::parse_int_list(o.alpha);
        req.beta = sptree::graphs::parse_int_list(o.beta.empty() ? "1" : o.beta);
        req.rule = sptree::cli::parse_an_rule(o.rule);
        req.rule_constant = o.a_const;
    } else {
        throw sptree::InvalidArgument("unknown family '" + o.family +
                                      "' (circulant, torus-constant, torus-sublinear)");
    }
    req.n_values = parse_n_values(o.n_values);
    req.max_vertices = g.max_vertices;
    req.start_digits = g.precision;
    req.agreement = g.tol;
    req.jobs = g.jobs;
    const auto rows = sptree::cli::cmd_compare(req);
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json j = {{"family", r.family}, {"n", r.n}, {"params", r.params},
                      {"predicted_log_det", r.predicted_log_det}};
            j["exact_log_det"] = r.exact_log_det ? json(*r.exact_log_det) : json(nullptr);
            j["residual"] = r.residual ? json(r.residual->text) : json(nullptr);
            j["tree_count"] = r.tree_count ? json(*r.tree_count) : json(nullptr);
            arr.push_back(std::move(j));
        }
        emit_json(g, "compare", arr);
        return;
    }
    header(g, "compare");
    std::cout << sptree::cli::compare_csv_header() << '\n';
    for (const auto& r : rows) std::cout << sptree::cli::to_csv(r) << '\n';
}

void run_conjecture(const Globals& g, std::int64_t n_min, std::int64_t n_max) {
    const auto rows = sptree::cli::cmd_conjecture(n_max, std::max(g.precision, 60u), g.max_vertices, n_min);
    const auto surd = sptree::cli::conjecture_surd_check(std::max(g.precision, 60u));
    bool all = true;
    for (const auto& r : rows) all = all && r.match;
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"exact", r.exact.get_str()}, {"predicted", r.predicted},
                           {"match", r.match}, {"digits_agreement", r.digits_agreement},
                           {"precision_digits", r.precision_digits},
                           {"stable_at_double_precision", r.match_at_double_precision}});
        emit_json(g, "conjecture",
                  {{"rows", arr},
                   {"surd_check", {{"digits", surd.digits}, {"x_error", surd.x_error},
                                   {"y_error", surd.y_error}, {"cosh_error", surd.cosh_error}}},
                   {"all_match", all}});
        return;
    }
    header(g, "conjecture");
    std::cout << "n,exact,predicted,match,digits_agreement,precision_digits,stable\n";
    for (const auto& r : rows)
        std::cout << r.n << ',' << r.exact.get_str() << ',' << r.predicted << ','
                  << (r.match ? "true" : "false") << ',' << r.digits_agreement << ','
                  << r.precision_digits << ',' << (r.match_at_double_precision ? "true" : "false") << '\n';
    std::cout << "# surd_check digits=" << surd.digits << " x_error=" << format_double(surd.x_error)
              << " y_error=" << format_double(surd.y_error)
              << " cosh_error=" << format_double(surd.cosh_error) << '\n';
}

void run_estimate_alpha(const Globals& g, std::int64_t beta, const std::string& n_values) {
    const auto fit = sptree::cli::cmd_estimate_alpha(beta, parse_n_values(n_values), g.tol, g.max_vertices);
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& t : fit.terms)
            arr.push_back({{"k", t.k}, {"J", t.J}, {"alpha", t.alpha},
                           {"candidate", t.candidate ? json(*t.candidate) : json(nullptr)}});
        emit_json(g, "estimate-alpha", {{"beta", fit.beta}, {"terms", arr},
                                        {"residual_norm", fit.residual_norm},
                                        {"iterations", fit.iterations}, {"note", fit.note}});
        return;
    }
    header(g, "estimate-alpha");
    std::cout << "k,J,alpha,candidate\n";
    for (const auto& t : fit.terms)
        std::cout << t.k << ',' << format_double(t.J) << ',' << format_double(t.alpha) << ','
                  << t.candidate.value_or("") << '\n';
    std::cout << "# residual_norm=" << format_double(fit.residual_norm) << " iterations=" << fit.iterations
              << " note=" << fit.note << '\n';
}

void run_specfun(const Globals& g, const std::string& name, const std::vector<std::string>& args) {
    const auto r = sptree::cli::cmd_specfun(name, args);
    emit_json(g, "specfun", {{"name", r.name}, {"args", r.args}, {"value", r.value},
                             {"error_estimate", r.error_estimate}});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spanning trees of circulant graphs and discrete tori"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tol", g.tol, "Relative agreement for precision escalation; candidate tolerance for estimate-alpha")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision", g.precision, "Starting working precision in decimal digits")
        ->check(CLI::Range(20u, 4000u));
    app.add_option("--jobs", g.jobs, "Worker threads for compare")->check(CLI::Range(1u, 256u));
    app.add_option("--max-vertices", g.max_vertices, "Largest graph for exact tree counts");
    app.add_flag("--no-header", g.no_header, "Omit the timestamp line");

    SpecOptions count_spec, spectrum_spec;
    auto* count = app.add_subcommand("count", "Exact spanning-tree count");
    add_spec_options(count, count_spec);
    auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues");
    add_spec_options(spectrum, spectrum_spec);

    CompareOptions cmp;
    auto* compare = app.add_subcommand("compare", "Exact log det* against the asymptotic prediction");
    compare->add_option("--family", cmp.family, "circulant, torus-constant or torus-sublinear");
    compare->add_option("--generators", cmp.generators, "Circulant generators G1,G2,...");
    compare->add_option("--alpha", cmp.alpha, "Slow-block multipliers A1,A2,...");
    compare->add_option("--beta", cmp.beta, "Growing-block multipliers B1,B2,...");
    compare->add_option("--rule", cmp.rule, "a_n rule: floor_sqrt, floor_log or constant");
    compare->add_option("--a-const", cmp.a_const, "a_n for the constant rule");
    compare->add_option("--n", cmp.n_values, "n values: N1,N2,... or START:STOP[:STEP]")->required();

    std::int64_t n_min = 2, n_max = 8;
    auto* conjecture = app.add_subcommand("conjecture", "Check the beta = 5 closed form");
    conjecture->add_option("--n-max", n_max, "Largest n");
    conjecture->add_option("--n-min", n_min, "Smallest n");

    std::int64_t beta = 5;
    std::string alpha_ns = "2:8";
    auto* estimate = app.add_subcommand("estimate-alpha", "Fit the constants of the beta-family product formula");
    estimate->add_option("--beta", beta, "beta");
    estimate->add_option("--n", alpha_ns, "n values: N1,N2,... or START:STOP[:STEP]");

    std::string fname;
    std::vector<std::string> fargs;
    auto* specfun = app.add_subcommand("specfun", "Evaluate a special function (JSON output)");
    specfun->add_option("name", fname, "bessel, theta, eta, zeta, lead, cd, epstein, zeta-prime-zero")->required();
    specfun->add_option("args", fargs, "Arguments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*count) run_count(g, count_spec);
        else if (*spectrum) run_spectrum(g, spectrum_spec);
        else if (*compare) run_compare(g, cmp);
        else if (*conjecture) run_conjecture(g, n_min, n_max);
        else if (*estimate) run_estimate_alpha(g, beta, alpha_ns);
        else if (*specfun) run_specfun(g, fname, fargs);
    } catch (const sptree::CapExceeded& e) {
        std::cerr << "sptree: " << e.what() << '\n';
        return kCap;
    } catch (const sptree::InvalidArgument& e) {
        std::cerr << "sptree: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sptree: invalid number: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "sptree: " << e.what() << '\n';
        return kNumerical;
    }
    return kOk;
}
