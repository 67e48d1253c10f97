#include "lgkit/linalg.hpp"

#include <algorithm>

#include "lgkit/errors.hpp"

namespace lgkit {

namespace {

// a -= factor * b, both sorted.
SparseVector axpy(const SparseVector& a, const GaussianRational& factor, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(factor * b[j].second));
            ++j;
        } else {
            GaussianRational v = a[i].second - factor * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool EchelonBasis::insert(SparseVector v) {
    while (!v.empty()) {
        const std::size_t lead = v.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            const GaussianRational inv = v.front().second.inverse();
            for (auto& e : v) e.second *= inv;
            pivots_.emplace(lead, std::move(v));
            return true;
        }
        const GaussianRational factor = v.front().second;
        v = axpy(v, factor, it->second);
    }
    return false;
}

std::size_t rank(const SparseMatrix& m) {
    EchelonBasis basis;
    for (const auto& col : m.columns)
        if (!col.empty()) basis.insert(col);
    return basis.rank();
}

GaussianRational SparseMatrix::at(std::size_t row, std::size_t col) const {
    for (const auto& [r, v] : columns.at(col))
        if (r == row) return v;
    return {};
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols() != other.rows) throw DimensionError("matrix product shape mismatch");
    SparseMatrix out;
    out.rows = rows;
    for (const auto& ocol : other.columns) {
        std::map<std::size_t, GaussianRational> acc;
        for (const auto& [k, b] : ocol)
            for (const auto& [r, a] : columns[k]) acc[r] += a * b;
        SparseVector v;
        for (auto& [r, x] : acc)
            if (!x.is_zero()) v.emplace_back(r, std::move(x));
        out.columns.push_back(std::move(v));
    }
    return out;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const SparseVector& c) { return c.empty(); });
}

}  // namespace lgkit
