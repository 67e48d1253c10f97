#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lgkit/complex.hpp"
#include "lgkit/poly.hpp"

namespace lgkit {

/// Free Z2-graded module E = E0 (+) E1 with odd endomorphism D = [[0, B], [A, 0]],
/// A : E0 -> E1 (r1 x r0), B : E1 -> E0 (r0 x r1).
class MatrixFactorization {
public:
    MatrixFactorization(std::size_t r0, std::size_t r1, PolyMatrix A, PolyMatrix B, Poly W);

    std::size_t r0() const { return r0_; }
    std::size_t r1() const { return r1_; }
    std::size_t rank() const { return r0_ + r1_; }
    const PolyMatrix& A() const { return A_; }
    const PolyMatrix& B() const { return B_; }
    const Poly& W() const { return W_; }
    std::size_t nvars() const { return W_.nvars(); }

    /// Entry of the full odd matrix D on E0 (+) E1.
    Poly D(std::size_t row, std::size_t col) const;

    /// Conjugation by constant invertible even gauge (g0 on E0, g1 on E1):
    /// A -> g1 A g0^-1, B -> g0 B g1^-1.
    MatrixFactorization gauge_transform(const std::vector<std::vector<GaussianRational>>& g0,
                                        const std::vector<std::vector<GaussianRational>>& g1) const;

private:
    std::size_t r0_, r1_;
    PolyMatrix A_, B_;
    Poly W_;
};

struct FactorizationCheck {
    PolyMatrix ba_residual;  // B*A - W*I (r0 x r0)
    PolyMatrix ab_residual;  // A*B - W*I (r1 x r1)
    bool ok = false;
};

FactorizationCheck verify_factorization(const MatrixFactorization& mf);

/// a_k = [[x2, x1^(n+1-k)], [x1^k, -x3]], b_k = [[x3, x1^(n+1-k)], [x1^k, -x2]]
/// factorizing x1^(n+1) + x2*x3; 0 <= k <= n+1.
MatrixFactorization quiver_factorization(unsigned n, unsigned k);

/// Rank (1,1) factorization of u*v with A = [u], B = [v].
MatrixFactorization elementary_factorization(const Poly& u, const Poly& v);

/// 2-periodic complex of block maps E1 -> E2 under
///   f -> D2 f - (-1)^|f| f D1;
/// position 0 holds even maps, position 1 odd maps. Components are ordered
/// row-major over the full (rank2 x rank1) block matrix, filtered by parity.
FreeComplex morphism_complex(const MatrixFactorization& a1, const MatrixFactorization& a2);

/// Exact matrices of the defect differential on block maps of degree <= cap.
TruncatedComplex defect_operator(const MatrixFactorization& a1, const MatrixFactorization& a2, unsigned cap);

struct HomDims {
    std::size_t even = 0;
    std::size_t odd = 0;
    bool stabilized = false;
    unsigned cap_used = 0;
    CohomologyReport report;
};

HomDims hmf_hom_dims(const MatrixFactorization& a1, const MatrixFactorization& a2, std::span<const unsigned> caps,
                     const TruncationOptions& options = {});

/// The 2-periodic complex (Lambda C^d) (x) End(E) with differential
/// iota_W + defect, where the defect part carries the sign (-1)^m on Lambda^m.
FreeComplex disk_complex(const MatrixFactorization& a);

struct DiskReport {
    std::size_t jacobi_dim = 0;
    HomDims end_dims;
    std::size_t predicted = 0;  // jacobi_dim * (even + odd endomorphism dims)
    std::size_t direct_even = 0;
    std::size_t direct_odd = 0;
    std::size_t direct = 0;
    bool stabilized = false;
    bool verdict = false;  // predicted == direct
    CohomologyReport direct_report;
};

/// Compares the Jacobi x End prediction with the direct cohomology of the disk
/// complex. Throws DomainError for an infinite Jacobi quotient and
/// InconclusiveError when either computation fails to stabilize.
DiskReport disk_algebra_dims(const MatrixFactorization& a, std::span<const unsigned> caps,
                             const TruncationOptions& options = {});

}  // namespace lgkit
