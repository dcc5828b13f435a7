#include "sptree/graphs.hpp"

#include <cmath>
#include <numbers>

#include "sptree/error.hpp"

namespace sptree::graphs {

namespace {

// 4 sin^2(pi r / m), with r reduced mod m first so the j = 0 entry is exactly 0.
double four_sin_sq(std::int64_t r, std::int64_t m) {
    r %= m;
    if (r == 0) return 0.0;
    const double s = std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(m));
    return 4.0 * s * s;
}

void check_cap(std::int64_t count, std::size_t cap) {
    if (count < 0 || static_cast<std::uint64_t>(count) > cap)
        throw CapExceeded("spectrum: " + std::to_string(count) +
                          " eigenvalues exceed the enumeration cap " + std::to_string(cap));
}

std::size_t count_zeros(const std::vector<double>& ev) {
    std::size_t z = 0;
    for (double x : ev)
        if (x == 0.0) ++z;
    return z;
}

} // namespace

Spectrum circulant_spectrum(const CirculantSpec& spec, std::size_t cap) {
    check_cap(spec.n, cap);
    for (auto g : spec.generators)
        if (g < 1 || g > spec.n / 2) throw InvalidArgument("circulant: generator out of range");
    Spectrum out;
    out.eigenvalues.resize(static_cast<std::size_t>(spec.n));
    for (std::int64_t j = 0; j < spec.n; ++j) {
        double lambda = 0.0;
        for (auto g : spec.generators) lambda += four_sin_sq(g * j, spec.n);
        out.eigenvalues[static_cast<std::size_t>(j)] = lambda;
    }
    out.zero_multiplicity = count_zeros(out.eigenvalues);
    return out;
}

Spectrum torus_spectrum(const TorusSpec& spec, std::size_t cap) {
    const std::int64_t nv = spec.vertex_count();
    check_cap(nv, cap);
    const std::size_t d = spec.sides.size();
    // Per-side tables, then a mixed-radix sweep with the last side fastest.
    std::vector<std::vector<double>> tables(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::int64_t m = 0; m < spec.sides[i]; ++m)
            tables[i].push_back(four_sin_sq(m, spec.sides[i]));
    Spectrum out;
    out.eigenvalues.resize(static_cast<std::size_t>(nv));
    std::vector<std::int64_t> idx(d, 0);
    for (std::int64_t v = 0; v < nv; ++v) {
        double lambda = 0.0;
        for (std::size_t i = 0; i < d; ++i) lambda += tables[i][static_cast<std::size_t>(idx[i])];
        out.eigenvalues[static_cast<std::size_t>(v)] = lambda;
        for (std::size_t i = d; i-- > 0;) {
            if (++idx[i] < spec.sides[i]) break;
            idx[i] = 0;
        }
    }
    out.zero_multiplicity = count_zeros(out.eigenvalues);
    return out;
}

Spectrum spectrum(const GraphSpec& spec, std::size_t cap) {
    if (auto c = std::get_if<CirculantSpec>(&spec)) return circulant_spectrum(*c, cap);
    return torus_spectrum(std::get<TorusSpec>(spec), cap);
}

double log_det_star(const Spectrum& spectrum) {
    if (spectrum.zero_multiplicity != 1)
        throw InvalidArgument("log_det_star: expected exactly one zero eigenvalue, found " +
                              std::to_string(spectrum.zero_multiplicity));
    if (spectrum.eigenvalues.size() < 2)
        throw InvalidArgument("log_det_star: no non-zero eigenvalues");
    // Neumaier summation in index order.
    double sum = 0.0, comp = 0.0;
    bool zero_seen = false;
    for (double x : spectrum.eigenvalues) {
        if (x == 0.0 && !zero_seen) {
            zero_seen = true;
            continue;
        }
        if (!(x > 0.0)) throw InvalidArgument("log_det_star: non-positive eigenvalue");
        const double term = std::log(x);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace sptree::graphs
