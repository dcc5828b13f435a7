#include "sptree/cli.hpp"

#include <cmath>

#include "sptree/error.hpp"
#include "sptree/mp.hpp"

namespace sptree::cli {

namespace {

using mp::Real;

constexpr unsigned kMaxDigits = 4000;

Real acosh_mp(const Real& x) { return log(x + sqrt(x * x - 1)); }

struct Surds {
    Real s5, x, y;
};

Surds surds() {
    Surds s;
    s.s5 = sqrt(Real(5));
    s.x = (9 - s.s5 + sqrt(70 - 18 * s.s5)) / 4;
    s.y = (9 + s.s5 + sqrt(70 + 18 * s.s5)) / 4;
    return s;
}

// (n/5) (x^n + x^-n + (1 - sqrt5)/2)^2 (y^n + y^-n + (1 + sqrt5)/2)^2
Real closed_form(std::int64_t n) {
    const Surds s = surds();
    const Real xn = pow(s.x, Real(n)), yn = pow(s.y, Real(n));
    const Real a = xn + 1 / xn + (1 - s.s5) / 2;
    const Real b = yn + 1 / yn + (1 + s.s5) / 2;
    return Real(n) / 5 * a * a * b * b;
}

struct Evaluation {
    bool unambiguous = false;
    bool match = false;
    int digits_agreement = 0;
    std::string text;
};

Evaluation evaluate(std::int64_t n, const mpz_class& exact, unsigned digits) {
    mp::PrecisionScope scope(digits);
    const Real p = closed_form(n);
    // Relative rounding error of the closed form stays far below 10^{10-digits}.
    const Real err = abs(p) * pow(Real(10), -Real(static_cast<long>(digits) - 10));
    const Real nearest = round(p);
    Evaluation ev;
    ev.unambiguous = abs(p - nearest) + err < Real(0.5);
    const Real ex = mp::from_mpz(exact);
    const Real diff = abs(p - ex);
    ev.match = diff < Real(0.5);
    if (diff == 0) {
        ev.digits_agreement = static_cast<int>(digits);
    } else {
        const Real d = -log10(diff / ex);
        ev.digits_agreement =
            static_cast<int>(std::min<double>(static_cast<double>(floor(d)), digits));
    }
    const auto int_digits = static_cast<long>(floor(log10(abs(p)))) + 1;
    ev.text = p.str(static_cast<std::streamsize>(std::max<long>(int_digits, 1) + 6), std::ios::fixed);
    if (auto dot = ev.text.find('.'); dot != std::string::npos && ev.text.size() > dot + 7)
        ev.text.resize(dot + 7);
    return ev;
}

} // namespace

std::vector<VerdictRow> cmd_conjecture(std::int64_t n_max, unsigned start_digits,
                                       std::size_t max_vertices, std::int64_t n_min) {
    if (n_min < 2) throw InvalidArgument("conjecture: n must be >= 2");
    if (n_max < n_min) throw InvalidArgument("conjecture: n_max must be >= 2");
    std::vector<VerdictRow> rows;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        VerdictRow row;
        row.n = n;
        row.exact = graphs::spanning_tree_count_exact(graphs::CirculantSpec::make(5 * n, {1, n}),
                                                      max_vertices)
                        .value;
        // Start with enough digits for the integer part plus a margin.
        const auto int_digits = static_cast<unsigned>(mpz_sizeinbase(row.exact.get_mpz_t(), 10));
        unsigned digits = std::max(start_digits, int_digits + 30);
        Evaluation ev = evaluate(n, row.exact, digits);
        while (!ev.unambiguous) {
            digits *= 2;
            if (digits > kMaxDigits)
                throw NumericalFailure("conjecture: rounding still ambiguous at " +
                                       std::to_string(kMaxDigits) + " digits for n = " +
                                       std::to_string(n));
            ev = evaluate(n, row.exact, digits);
        }
        row.match = ev.match;
        row.digits_agreement = ev.digits_agreement;
        row.predicted = ev.text;
        row.precision_digits = digits;
        row.match_at_double_precision = evaluate(n, row.exact, 2 * digits).match;
        rows.push_back(std::move(row));
    }
    return rows;
}

SurdCheck conjecture_surd_check(unsigned digits) {
    mp::PrecisionScope scope(digits);
    const Surds s = surds();
    const Real two_pi = 2 * mp::pi();
    const Real j1 = acosh_mp(2 - cos(two_pi / 5));
    const Real j2 = acosh_mp(2 - cos(2 * two_pi / 5));
    SurdCheck c;
    c.x_error = static_cast<double>(abs(s.x - exp(j1)));
    c.y_error = static_cast<double>(abs(s.y - exp(j2)));
    c.cosh_error = static_cast<double>(abs(cosh(j1) - (9 - s.s5) / 4));
    c.digits = digits;
    return c;
}

} // namespace sptree::cli
