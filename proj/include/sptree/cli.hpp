#pragma once

// Command implementations behind the sptree executable. Each command returns
// value objects; formatting to CSV/JSON lives in format.cpp.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sptree/graphs.hpp"

namespace sptree::cli {

// A decimal kept as text so values below the double range survive; `value`
// is the text parsed as double.
struct Decimal {
    std::string text;
    double value = 0.0;

    static Decimal from_double(double v);
    static Decimal from_text(const std::string& text);
    bool operator==(const Decimal& o) const { return text == o.text; }
};

// 17 significant digits, the shortest form that round-trips a double.
std::string format_double(double v);

enum class AnRule { floor_sqrt, floor_log, constant };

struct CompareRequest {
    enum class Family { circulant, torus_constant, torus_sublinear } family = Family::circulant;
    std::vector<std::int64_t> generators;   // circulant
    std::vector<std::int64_t> alpha, beta;  // tori
    AnRule rule = AnRule::floor_sqrt;
    std::int64_t rule_constant = 1;
    std::vector<std::int64_t> n_values;
    std::size_t max_vertices = graphs::kDefaultDeterminantCap;
    std::size_t enumeration_cap = graphs::kDefaultEnumerationCap;
    // Eigenvalue count up to which residuals are computed in MPFR.
    std::size_t precise_cap = 20000;
    unsigned start_digits = 40;
    double agreement = 1e-6;
    unsigned jobs = 1;
};

struct CompareRow {
    std::string family;
    std::int64_t n = 0;
    std::string params;
    std::optional<double> exact_log_det;
    double predicted_log_det = 0.0;
    std::optional<Decimal> residual;
    std::optional<std::string> tree_count;

    bool operator==(const CompareRow& o) const;
};

std::int64_t a_n_value(AnRule rule, std::int64_t n, std::int64_t constant);
AnRule parse_an_rule(const std::string& text);

std::vector<CompareRow> cmd_compare(const CompareRequest& request);

std::string compare_csv_header();
std::string to_csv(const CompareRow& row);
CompareRow parse_csv_row(const std::string& line);

struct VerdictRow {
    std::int64_t n = 0;
    mpz_class exact;
    std::string predicted;  // decimal expansion at the final precision
    bool match = false;
    int digits_agreement = 0;
    unsigned precision_digits = 0;
    // Verdict at twice the final precision, recomputed as a stability check.
    bool match_at_double_precision = false;
};

struct SurdCheck {
    // |x_+ - e^{J_1}|, |y_+ - e^{J_2}|, |cosh(J_1) - (9 - sqrt 5)/4| at `digits`.
    double x_error = 0.0;
    double y_error = 0.0;
    double cosh_error = 0.0;
    unsigned digits = 0;
};

std::vector<VerdictRow> cmd_conjecture(std::int64_t n_max, unsigned start_digits = 60,
                                       std::size_t max_vertices = graphs::kDefaultDeterminantCap,
                                       std::int64_t n_min = 2);
SurdCheck conjecture_surd_check(unsigned digits);

struct ConjectureTerm {
    std::int64_t k = 0;
    double J = 0.0;
    double alpha = 0.0;
    std::optional<std::string> candidate;
};

struct AlphaFit {
    std::int64_t beta = 0;
    std::vector<ConjectureTerm> terms;
    double residual_norm = 0.0;
    int iterations = 0;
    std::string note;
};

AlphaFit cmd_estimate_alpha(std::int64_t beta, const std::vector<std::int64_t>& n_values,
                            double candidate_tol = 1e-6,
                            std::size_t max_vertices = graphs::kDefaultDeterminantCap);

struct SpecfunResult {
    std::string name;
    std::vector<std::string> args;
    double value = 0.0;
    double error_estimate = 0.0;
};

SpecfunResult cmd_specfun(const std::string& name, const std::vector<std::string>& args);

} // namespace sptree::cli
