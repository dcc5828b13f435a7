#include "sptree/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "sptree/bareiss.hpp"
#include "sptree/error.hpp"

namespace sptree::graphs {

CirculantSpec CirculantSpec::make(std::int64_t n, std::vector<std::int64_t> generators) {
    if (n < 2) throw InvalidArgument("circulant: n must be at least 2");
    if (generators.empty()) throw InvalidArgument("circulant: empty generator set");
    std::sort(generators.begin(), generators.end());
    if (generators.front() != 1)
        throw InvalidArgument("circulant: first generator must be 1");
    // Generators above n/2 act as n - g (C_3^{1,2} is the doubled triangle);
    // only multiples of n, which would be loops, are rejected.
    if (generators.back() >= n)
        throw InvalidArgument("circulant: generator " + std::to_string(generators.back()) +
                              " is not below n = " + std::to_string(n));
    return CirculantSpec{n, std::move(generators)};
}

std::int64_t CirculantSpec::c_gamma() const {
    std::int64_t c = 0;
    for (auto g : generators) c += g * g;
    return c;
}

TorusSpec TorusSpec::make(std::vector<std::int64_t> sides, std::optional<std::size_t> split) {
    if (sides.empty()) throw InvalidArgument("torus: no sides");
    for (auto s : sides)
        if (s < 1) throw InvalidArgument("torus: every side must be >= 1");
    if (split && *split > sides.size())
        throw InvalidArgument("torus: split index exceeds dimension");
    TorusSpec spec{std::move(sides), split};
    (void)spec.vertex_count();
    return spec;
}

std::int64_t TorusSpec::vertex_count() const {
    std::int64_t v = 1;
    for (auto s : sides) {
        if (v > std::numeric_limits<std::int64_t>::max() / s)
            throw CapExceeded("torus: vertex count overflows 64 bits");
        v *= s;
    }
    return v;
}

std::int64_t vertex_count(const GraphSpec& spec) {
    return std::visit([](const auto& s) { return s.vertex_count(); }, spec);
}

std::size_t dimension(const GraphSpec& spec) {
    return std::visit([](const auto& s) { return s.dimension(); }, spec);
}

namespace {

std::string join(const std::vector<std::int64_t>& v, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string describe(const GraphSpec& spec) {
    if (auto c = std::get_if<CirculantSpec>(&spec))
        return "C_" + std::to_string(c->n) + "^{" + join(c->generators, ',') + "}";
    const auto& t = std::get<TorusSpec>(spec);
    return "Z^d/diag(" + join(t.sides, ',') + ")";
}

double TreeCount::log() const {
    if (value <= 0) throw InvalidArgument("log of non-positive tree count");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::vector<Edge> edges(const GraphSpec& spec) {
    std::vector<Edge> out;
    if (auto c = std::get_if<CirculantSpec>(&spec)) {
        out.reserve(static_cast<std::size_t>(c->n) * c->generators.size());
        for (std::int64_t v = 0; v < c->n; ++v)
            for (auto g : c->generators) out.push_back({v, (v + g) % c->n});
        return out;
    }
    const auto& t = std::get<TorusSpec>(spec);
    const std::int64_t nv = t.vertex_count();
    // Row-major coordinates, last side fastest.
    std::vector<std::int64_t> stride(t.sides.size(), 1);
    for (std::size_t i = t.sides.size(); i-- > 1;) stride[i - 1] = stride[i] * t.sides[i];
    for (std::int64_t v = 0; v < nv; ++v) {
        for (std::size_t i = 0; i < t.sides.size(); ++i) {
            const std::int64_t l = t.sides[i];
            if (l == 1) continue;
            const std::int64_t coord = (v / stride[i]) % l;
            const std::int64_t w = v + (coord + 1 == l ? -(l - 1) * stride[i] : stride[i]);
            out.push_back({v, w});
        }
    }
    return out;
}

bool is_connected(const GraphSpec& spec) {
    const auto nv = static_cast<std::size_t>(vertex_count(spec));
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = nv;
    for (const auto& e : edges(spec)) {
        auto a = find(static_cast<std::size_t>(e.u));
        auto b = find(static_cast<std::size_t>(e.v));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw InvalidArgument("not an integer list: '" + text + "'");
        }
        if (pos != item.size()) throw InvalidArgument("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidArgument("empty integer list");
    return out;
}

} // namespace sptree::graphs
