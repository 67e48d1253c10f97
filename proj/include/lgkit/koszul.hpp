#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lgkit/complex.hpp"
#include "lgkit/poly.hpp"

namespace lgkit {

/// Size-k subsets of {0..n-1} in lexicographic order; the basis of Lambda^k.
std::vector<std::vector<std::size_t>> exterior_basis(std::size_t n, std::size_t k);

/// Contraction against dW on the exterior algebra of C^d with polynomial coefficients:
///   e_{i1..ik} -> sum_r (-1)^r (d_{i_r} W) e_{i1..(i_r omitted)..ik}.
class KoszulComplex {
public:
    explicit KoszulComplex(Poly W);

    const Poly& superpotential() const { return W_; }
    std::size_t dimension() const { return W_.nvars(); }
    const std::vector<Poly>& partials() const { return partials_; }

    /// Matrix of the contraction Lambda^k -> Lambda^(k-1), 1 <= k <= d.
    PolyMatrix contraction(std::size_t k) const;

    /// Positions -d..0 (position -k hosts Lambda^k).
    FreeComplex free_complex() const;

private:
    Poly W_;
    std::vector<Poly> partials_;
};

/// Exact matrices of the complex with coefficients of degree <= D.
TruncatedComplex build_truncated_koszul(const Poly& W, unsigned degree);

CohomologyReport koszul_cohomology_dims(const Poly& W, std::span<const unsigned> caps,
                                        const TruncationOptions& options = {});

}  // namespace lgkit
