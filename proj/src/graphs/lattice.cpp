#include "sptree/graphs.hpp"

#include "sptree/bareiss.hpp"

namespace sptree::graphs {

mpz_class LatticeMatrix::determinant() const {
    SparseIntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (at(i, j) != 0) m.add(i, j, static_cast<long>(at(i, j)));
    return bareiss_determinant(std::move(m));
}

LatticeMatrix circulant_to_lattice(const CirculantSpec& spec) {
    const std::size_t d = spec.dimension();
    LatticeMatrix m{d, std::vector<std::int64_t>(d * d, 0)};
    m.entries[0] = spec.n;
    for (std::size_t i = 1; i < d; ++i) {
        m.entries[i] = -spec.generators[i];
        m.entries[i * d + i] = 1;
    }
    return m;
}

} // namespace sptree::graphs
