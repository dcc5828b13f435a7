#include "sptree/bareiss.hpp"

#include <algorithm>

#include "sptree/error.hpp"

namespace sptree::graphs {

void SparseIntMatrix::add(std::size_t row, std::size_t col, long value) {
    if (row >= dim() || col >= dim()) throw InvalidArgument("sparse matrix index out of range");
    auto& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == col) {
        it->second += value;
        if (it->second == 0) r.erase(it);
    } else if (value != 0) {
        r.insert(it, Entry{col, mpz_class(value)});
    }
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
    SparseIntMatrix m(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i].size() != dense.size()) throw InvalidArgument("matrix is not square");
        for (std::size_t j = 0; j < dense.size(); ++j)
            if (dense[i][j] != 0) m.add(i, j, dense[i][j]);
    }
    return m;
}

namespace {

using Row = SparseIntMatrix::Row;

// Multiplies every entry by num/den; the quotient is known to be exact.
void rescale(Row& row, const mpz_class& num, const mpz_class& den) {
    if (num == den) return;
    for (auto& e : row) {
        e.second *= num;
        mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), den.get_mpz_t());
    }
}

} // namespace

mpz_class bareiss_determinant(SparseIntMatrix matrix) {
    const std::size_t n = matrix.dim();
    if (n == 0) return 1;

    // divisor[k] is the pivot of step k-1 (divisor[0] = 1); stamp[i] is the
    // step whose input row i currently holds.
    std::vector<mpz_class> divisor(n + 1);
    divisor[0] = 1;
    std::vector<std::size_t> stamp(n, 0);
    int sign = 1;
    Row scratch;

    for (std::size_t k = 0; k < n; ++k) {
        // Rows below k only hold columns >= k, so the leading column decides.
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            const Row& r = matrix.row(i);
            if (!r.empty() && r.front().first == k) {
                piv = i;
                break;
            }
        }
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(matrix.row(piv), matrix.row(k));
            std::swap(stamp[piv], stamp[k]);
            sign = -sign;
        }
        Row& prow = matrix.row(k);
        rescale(prow, divisor[k], divisor[stamp[k]]);
        stamp[k] = k;
        const mpz_class pivot = prow.front().second;

        for (std::size_t i = k + 1; i < n; ++i) {
            Row& r = matrix.row(i);
            if (r.empty() || r.front().first != k) continue;
            rescale(r, divisor[k], divisor[stamp[i]]);
            const mpz_class factor = r.front().second;

            // new = (r * pivot - factor * prow) / divisor[k] over columns > k.
            scratch.clear();
            auto a = r.begin() + 1, ae = r.end();
            auto b = prow.begin() + 1, be = prow.end();
            mpz_class v;
            while (a != ae || b != be) {
                std::size_t col;
                if (b == be || (a != ae && a->first < b->first)) {
                    col = a->first;
                    v = a->second * pivot;
                    ++a;
                } else if (a == ae || b->first < a->first) {
                    col = b->first;
                    v = -factor * b->second;
                    ++b;
                } else {
                    col = a->first;
                    v = a->second * pivot - factor * b->second;
                    ++a;
                    ++b;
                }
                if (v == 0) continue;
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), divisor[k].get_mpz_t());
                scratch.emplace_back(col, v);
            }
            r.swap(scratch);
            stamp[i] = k + 1;
        }
        divisor[k + 1] = pivot;
    }
    return sign * divisor[n];
}

} // namespace sptree::graphs
