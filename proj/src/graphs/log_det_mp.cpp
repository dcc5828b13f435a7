#include "sptree/graphs_mp.hpp"

#include "sptree/error.hpp"

namespace sptree::graphs {

namespace {

using mp::Real;

// Table of 4 sin^2(pi r / m) for r = 0..m-1.
std::vector<Real> sin_table(std::int64_t m) {
    std::vector<Real> t(static_cast<std::size_t>(m));
    const Real step = mp::pi() / Real(m);
    for (std::int64_t r = 0; r < m; ++r) {
        if (r == 0) {
            t[0] = 0;
            continue;
        }
        // Symmetry r <-> m - r.
        if (2 * r > m) {
            t[static_cast<std::size_t>(r)] = t[static_cast<std::size_t>(m - r)];
            continue;
        }
        Real s = sin(step * Real(r));
        t[static_cast<std::size_t>(r)] = 4 * s * s;
    }
    return t;
}

} // namespace

mp::Real log_det_star_mp(const GraphSpec& spec, std::size_t cap) {
    const std::int64_t nv = vertex_count(spec);
    if (static_cast<std::uint64_t>(nv) > cap)
        throw CapExceeded("log_det_star_mp: vertex count exceeds the enumeration cap");
    if (nv < 2) throw InvalidArgument("log_det_star_mp: no non-zero eigenvalues");
    if (!is_connected(spec)) throw InvalidArgument("log_det_star_mp: disconnected graph");
    Real sum = 0;
    if (auto c = std::get_if<CirculantSpec>(&spec)) {
        const auto table = sin_table(c->n);
        for (std::int64_t j = 1; j < c->n; ++j) {
            Real lambda = 0;
            for (auto g : c->generators) lambda += table[static_cast<std::size_t>((g * j) % c->n)];
            sum += log(lambda);
        }
        return sum;
    }
    const auto& t = std::get<TorusSpec>(spec);
    const std::size_t d = t.sides.size();
    std::vector<std::vector<Real>> tables;
    for (auto l : t.sides) tables.push_back(sin_table(l));
    std::vector<std::int64_t> idx(d, 0);
    for (std::int64_t v = 0; v < nv; ++v) {
        if (v > 0) {
            Real lambda = 0;
            for (std::size_t i = 0; i < d; ++i) lambda += tables[i][static_cast<std::size_t>(idx[i])];
            sum += log(lambda);
        }
        for (std::size_t i = d; i-- > 0;) {
            if (++idx[i] < t.sides[i]) break;
            idx[i] = 0;
        }
    }
    return sum;
}

} // namespace sptree::graphs
