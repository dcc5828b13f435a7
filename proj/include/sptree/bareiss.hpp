#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sptree::graphs {

// Square integer matrix with sorted sparse rows.
class SparseIntMatrix {
public:
    using Entry = std::pair<std::size_t, mpz_class>;
    using Row = std::vector<Entry>;

    explicit SparseIntMatrix(std::size_t dim) : rows_(dim) {}

    std::size_t dim() const { return rows_.size(); }

    // Adds `value` to entry (row, col).
    void add(std::size_t row, std::size_t col, long value);

    const Row& row(std::size_t i) const { return rows_[i]; }
    Row& row(std::size_t i) { return rows_[i]; }

    static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& dense);

private:
    std::vector<Row> rows_;
};

// Fraction-free (Bareiss) elimination. Entries created by an elimination step
// are exact minors, so every division is exact. Rows with a zero in the pivot
// column are rescaled lazily, only when they are next touched.
mpz_class bareiss_determinant(SparseIntMatrix matrix);

} // namespace sptree::graphs
