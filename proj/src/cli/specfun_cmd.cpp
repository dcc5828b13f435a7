#include "sptree/cli.hpp"

#include <cstdlib>

#include "sptree/asym.hpp"
#include "sptree/error.hpp"
#include "sptree/specfun.hpp"

namespace sptree::cli {

namespace {

double num(const std::string& s) { return Decimal::from_text(s).value; }

std::int64_t integer(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw InvalidArgument("not an integer: '" + s + "'");
    return v;
}

std::vector<double> reals(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        out.push_back(num(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void arity(const std::string& name, const std::vector<std::string>& args, std::size_t lo,
           std::size_t hi, const char* usage) {
    if (args.size() < lo || args.size() > hi)
        throw InvalidArgument("specfun " + name + ": usage: " + usage);
}

} // namespace

SpecfunResult cmd_specfun(const std::string& name, const std::vector<std::string>& args) {
    SpecfunResult r{name, args, 0.0, 0.0};
    if (name == "bessel") {
        arity(name, args, 2, 2, "bessel <order> <t>");
        r.value = specfun::bessel_i_scaled(integer(args[0]), num(args[1]));
        r.error_estimate = 1e-12 * std::abs(r.value);
    } else if (name == "theta") {
        arity(name, args, 1, 2, "theta <t> [side1,side2,...]");
        const auto sides = args.size() == 2 ? reals(args[1]) : std::vector<double>{1.0};
        r.value = specfun::theta_real_torus(sides, num(args[0]));
        r.error_estimate = 1e-14 * r.value;
    } else if (name == "eta") {
        arity(name, args, 1, 1, "eta <y>");
        r.value = specfun::dedekind_eta(num(args[0]));
        r.error_estimate = 1e-15 * r.value;
    } else if (name == "zeta") {
        arity(name, args, 1, 1, "zeta <s>");
        r.value = specfun::riemann_zeta_real(num(args[0]));
        r.error_estimate = 1e-14 * r.value;
    } else if (name == "lead") {
        arity(name, args, 1, 1, "lead <g1,g2,...>");
        const auto lead = asym::lead_term_circulant(graphs::parse_int_list(args[0]));
        r.value = lead.value;
        r.error_estimate = std::max(lead.error_estimate, std::abs(lead.value - lead.cross_check.value_or(lead.value)));
    } else if (name == "cd") {
        arity(name, args, 1, 1, "cd <d>");
        const auto c = asym::c_d(static_cast<int>(integer(args[0])));
        r.value = c.value;
        r.error_estimate = c.error_estimate;
    } else if (name == "epstein") {
        arity(name, args, 2, 2, "epstein <side1,...> <s>");
        const auto e = asym::epstein_zeta_sum(reals(args[0]), num(args[1]));
        r.value = e.value;
        r.error_estimate = e.tail_bound;
    } else if (name == "zeta-prime-zero") {
        arity(name, args, 1, 2, "zeta-prime-zero <side1,...> [split]");
        r.value = asym::epstein_zeta_prime_zero(reals(args[0]), args.size() == 2 ? num(args[1]) : 1.0);
        r.error_estimate = 1e-11;
    } else {
        throw InvalidArgument("specfun: unknown function '" + name +
                              "' (bessel, theta, eta, zeta, lead, cd, epstein, zeta-prime-zero)");
    }
    return r;
}

} // namespace sptree::cli
