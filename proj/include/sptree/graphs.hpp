#pragma once

// Circulant graphs C_n^Gamma and diagonal discrete tori Z^d / diag(l_1..l_d) Z^d:
// closed-form Laplacian spectra, exact spanning-tree counts and the
// circulant-to-lattice isomorphism.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace sptree::graphs {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::size_t kDefaultDeterminantCap = 2000;

// Circulant graph on Z/nZ where v is joined to v +- g for every g in the
// generator list. The first generator is always 1 and the list is sorted;
// a generator equal to n/2 yields a doubled edge so the graph stays 2d-regular.
// Generators up to n - 1 are accepted; g > n/2 joins the same pairs as n - g.
struct CirculantSpec {
    std::int64_t n = 0;
    std::vector<std::int64_t> generators;

    // Validates and returns the spec; throws InvalidArgument otherwise.
    static CirculantSpec make(std::int64_t n, std::vector<std::int64_t> generators);

    std::size_t dimension() const { return generators.size(); }
    std::int64_t vertex_count() const { return n; }
    // c_Gamma = sum of squared generators (the leading 1 contributes 1).
    std::int64_t c_gamma() const;
};

// Diagonal discrete torus. `split`, when present, marks the first `split`
// sides as the slowly growing (or constant) block.
struct TorusSpec {
    std::vector<std::int64_t> sides;
    std::optional<std::size_t> split;

    static TorusSpec make(std::vector<std::int64_t> sides,
                          std::optional<std::size_t> split = std::nullopt);

    std::size_t dimension() const { return sides.size(); }
    // Product of the sides; throws CapExceeded on int64 overflow.
    std::int64_t vertex_count() const;
};

using GraphSpec = std::variant<CirculantSpec, TorusSpec>;

std::int64_t vertex_count(const GraphSpec& spec);
std::size_t dimension(const GraphSpec& spec);
std::string describe(const GraphSpec& spec);

struct Spectrum {
    std::vector<double> eigenvalues;
    std::size_t zero_multiplicity = 0;

    std::size_t size() const { return eigenvalues.size(); }
};

struct TreeCount {
    mpz_class value;

    std::string to_string() const { return value.get_str(); }
    // Natural logarithm, accurate to double precision for any magnitude.
    double log() const;
};

// Square integer matrix stored row-major.
struct LatticeMatrix {
    std::size_t dim = 0;
    std::vector<std::int64_t> entries;

    std::int64_t at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
    mpz_class determinant() const;
};

Spectrum circulant_spectrum(const CirculantSpec& spec,
                            std::size_t cap = kDefaultEnumerationCap);
Spectrum torus_spectrum(const TorusSpec& spec, std::size_t cap = kDefaultEnumerationCap);
Spectrum spectrum(const GraphSpec& spec, std::size_t cap = kDefaultEnumerationCap);

// Sum of log(lambda) over the non-zero eigenvalues, in index order.
double log_det_star(const Spectrum& spectrum);

// Matrix-tree theorem: determinant of the Laplacian with vertex 0 deleted.
TreeCount spanning_tree_count_exact(const GraphSpec& spec,
                                    std::size_t max_vertices = kDefaultDeterminantCap);

LatticeMatrix circulant_to_lattice(const CirculantSpec& spec);

// Multigraph edge list {u, v} with multiplicity, loops omitted. The Laplacian,
// the tree count and the test oracles are all derived from this one list.
struct Edge {
    std::int64_t u;
    std::int64_t v;
};
std::vector<Edge> edges(const GraphSpec& spec);

bool is_connected(const GraphSpec& spec);

// Parses "1,2,3" into integers; throws InvalidArgument on malformed input.
std::vector<std::int64_t> parse_int_list(const std::string& text);

} // namespace sptree::graphs
