#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "lgkit/gaussian_rational.hpp"

namespace lgkit {

/// Sparse vector over Q(i): entries sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, GaussianRational>>;

/// Column-oriented sparse matrix over Q(i).
struct SparseMatrix {
    std::size_t rows = 0;
    std::vector<SparseVector> columns;

    std::size_t cols() const { return columns.size(); }
    /// Dense entry lookup (for tests and small matrices).
    GaussianRational at(std::size_t row, std::size_t col) const;
    /// Product this * other (exact).
    SparseMatrix multiply(const SparseMatrix& other) const;
    bool is_zero() const;
};

/// Row-echelon basis grown one vector at a time with exact elimination.
class EchelonBasis {
public:
    /// Returns true when v is independent of the vectors inserted so far.
    bool insert(SparseVector v);
    std::size_t rank() const { return pivots_.size(); }

private:
    // pivot index -> vector normalised to 1 at its pivot (its smallest index)
    std::map<std::size_t, SparseVector> pivots_;
};

/// Rank of the column span.
std::size_t rank(const SparseMatrix& m);

/// Rank of the columns after keeping only rows for which keep_row(row) is true.
template <class Pred>
std::size_t rank_of_rows(const SparseMatrix& m, Pred keep_row) {
    EchelonBasis basis;
    for (const auto& col : m.columns) {
        SparseVector v;
        for (const auto& e : col)
            if (keep_row(e.first)) v.push_back(e);
        if (!v.empty()) basis.insert(std::move(v));
    }
    return basis.rank();
}

}  // namespace lgkit
