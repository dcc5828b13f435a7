#include "sptree/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "sptree/error.hpp"

namespace sptree::cli {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Decimal Decimal::from_double(double v) { return Decimal{format_double(v), v}; }

Decimal Decimal::from_text(const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size())
        throw InvalidArgument("not a number: '" + text + "'");
    return Decimal{text, v};
}

bool CompareRow::operator==(const CompareRow& o) const {
    return family == o.family && n == o.n && params == o.params &&
           exact_log_det == o.exact_log_det && predicted_log_det == o.predicted_log_det &&
           residual == o.residual && tree_count == o.tree_count;
}

namespace {

constexpr const char* kUnavailable = "unavailable";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) { return Decimal::from_text(s).value; }

} // namespace

std::string compare_csv_header() {
    return "family,n,params,exact_log_det,predicted_log_det,residual,tree_count";
}

std::string to_csv(const CompareRow& row) {
    std::ostringstream os;
    os << row.family << ',' << row.n << ',' << row.params << ','
       << (row.exact_log_det ? format_double(*row.exact_log_det) : kUnavailable) << ','
       << format_double(row.predicted_log_det) << ','
       << (row.residual ? row.residual->text : kUnavailable) << ','
       << row.tree_count.value_or("");
    return os.str();
}

CompareRow parse_csv_row(const std::string& line) {
    const auto f = split(line, ',');
    if (f.size() != 7) throw InvalidArgument("csv row must have 7 fields: '" + line + "'");
    CompareRow row;
    row.family = f[0];
    row.n = std::stoll(f[1]);
    row.params = f[2];
    if (f[3] != kUnavailable) row.exact_log_det = parse_double(f[3]);
    row.predicted_log_det = parse_double(f[4]);
    if (f[5] != kUnavailable) row.residual = Decimal::from_text(f[5]);
    if (!f[6].empty()) row.tree_count = f[6];
    return row;
}

} // namespace sptree::cli
