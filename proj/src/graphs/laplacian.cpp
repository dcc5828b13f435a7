#include "sptree/graphs.hpp"

#include "sptree/bareiss.hpp"
#include "sptree/error.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace sptree::graphs {

namespace {

// Position of c in the cycle order 0, L-1, 1, L-2, ...; cycle neighbours end
// up at most two positions apart.
std::int64_t interleave(std::int64_t c, std::int64_t L) {
    return c < (L + 1) / 2 ? 2 * c : 2 * (L - 1 - c) + 1;
}

// Elimination order that keeps the reduced Laplacian banded: every cycle
// coordinate is interleaved and, for tori, the longest side varies slowest.
// Vertex 0 keeps position 0.
std::vector<std::int64_t> elimination_order(const GraphSpec& spec) {
    const std::int64_t nv = vertex_count(spec);
    std::vector<std::int64_t> pos(static_cast<std::size_t>(nv));
    if (auto c = std::get_if<CirculantSpec>(&spec)) {
        for (std::int64_t v = 0; v < nv; ++v) pos[static_cast<std::size_t>(v)] = interleave(v, c->n);
        return pos;
    }
    const auto& sides = std::get<TorusSpec>(spec).sides;
    const std::size_t d = sides.size();
    std::vector<std::size_t> axes(d);
    std::iota(axes.begin(), axes.end(), 0);
    std::stable_sort(axes.begin(), axes.end(), [&](auto a, auto b) { return sides[a] > sides[b]; });
    std::vector<std::int64_t> stride(d, 1), coord(d, 0);
    for (std::size_t i = d; i-- > 1;) stride[i - 1] = stride[i] * sides[i];
    for (std::int64_t v = 0; v < nv; ++v) {
        std::int64_t p = 0;
        for (auto a : axes) p = p * sides[a] + interleave((v / stride[a]) % sides[a], sides[a]);
        pos[static_cast<std::size_t>(v)] = p;
    }
    return pos;
}

} // namespace

TreeCount spanning_tree_count_exact(const GraphSpec& spec, std::size_t max_vertices) {
    const std::int64_t nv = vertex_count(spec);
    if (nv < 1 || static_cast<std::uint64_t>(nv) > max_vertices)
        throw CapExceeded("spanning_tree_count_exact: " + std::to_string(nv) +
                          " vertices exceed the cap " + std::to_string(max_vertices));
    if (!is_connected(spec))
        throw InvalidArgument("spanning_tree_count_exact: graph " + describe(spec) +
                              " is disconnected");
    if (nv == 1) return TreeCount{1};

    // Reduced Laplacian: vertex 0 deleted, vertex v maps to row pos[v] - 1.
    const auto pos = elimination_order(spec);
    SparseIntMatrix lap(static_cast<std::size_t>(nv - 1));
    for (const auto& e : edges(spec)) {
        if (e.u == e.v) continue;
        const std::int64_t pu = pos[static_cast<std::size_t>(e.u)], pv = pos[static_cast<std::size_t>(e.v)];
        const bool ku = pu != 0, kv = pv != 0;
        const auto iu = static_cast<std::size_t>(pu - 1), iv = static_cast<std::size_t>(pv - 1);
        if (ku) lap.add(iu, iu, 1);
        if (kv) lap.add(iv, iv, 1);
        if (ku && kv) {
            lap.add(iu, iv, -1);
            lap.add(iv, iu, -1);
        }
    }
    return TreeCount{bareiss_determinant(std::move(lap))};
}

} // namespace sptree::graphs
