#include "lgkit/koszul.hpp"

#include <algorithm>
#include <map>

#include "lgkit/errors.hpp"

namespace lgkit {

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> exterior_basis(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    if (k <= n) subsets(n, k, 0, cur, out);
    return out;
}

KoszulComplex::KoszulComplex(Poly W) : W_(std::move(W)) {
    if (W_.nvars() == 0) throw DimensionError("Koszul complex needs at least one variable");
    if (W_.is_constant()) throw DomainError("Koszul complex needs a non-constant superpotential");
    for (std::size_t i = 0; i < W_.nvars(); ++i) partials_.push_back(W_.derivative(i));
}

PolyMatrix KoszulComplex::contraction(std::size_t k) const {
    const std::size_t d = dimension();
    if (k == 0 || k > d) throw DomainError("contraction degree out of range");
    const auto src = exterior_basis(d, k);
    const auto tgt = exterior_basis(d, k - 1);
    std::map<std::vector<std::size_t>, std::size_t> tgt_index;
    for (std::size_t i = 0; i < tgt.size(); ++i) tgt_index.emplace(tgt[i], i);

    PolyMatrix m(tgt.size(), std::vector<Poly>(src.size(), Poly(d)));
    for (std::size_t c = 0; c < src.size(); ++c) {
        for (std::size_t r = 0; r < k; ++r) {
            std::vector<std::size_t> rest = src[c];
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
            Poly entry = partials_[src[c][r]];
            if (r % 2 == 1) entry = -entry;
            m[tgt_index.at(rest)][c] += entry;
        }
    }
    return m;
}

FreeComplex KoszulComplex::free_complex() const {
    const std::size_t d = dimension();
    FreeComplex fc;
    fc.nvars = d;
    fc.periodic = false;
    for (std::size_t p = 0; p <= d; ++p) {
        const std::size_t k = d - p;
        fc.labels.push_back(-static_cast<int>(k));
        fc.ranks.push_back(exterior_basis(d, k).size());
        if (k >= 1) fc.differentials.push_back(contraction(k));
    }
    return fc;
}

TruncatedComplex build_truncated_koszul(const Poly& W, unsigned degree) {
    const KoszulComplex K(W);
    if (degree + 1 < static_cast<unsigned>(W.degree()))
        throw DomainError("truncation degree too small to contain the partial derivatives of W");
    return truncate(K.free_complex(), degree);
}

CohomologyReport koszul_cohomology_dims(const Poly& W, std::span<const unsigned> caps, const TruncationOptions& options) {
    const KoszulComplex K(W);
    return stabilized_cohomology(K.free_complex(), caps, options);
}

}  // namespace lgkit
