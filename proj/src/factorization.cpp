#include "lgkit/factorization.hpp"

#include <map>
#include <utility>

#include "lgkit/errors.hpp"
#include "lgkit/koszul.hpp"

namespace lgkit {

namespace {

void check_shape(const PolyMatrix& m, std::size_t rows, std::size_t cols, std::size_t nvars, const char* name) {
    if (m.size() != rows) throw DimensionError(std::string(name) + " has the wrong number of rows");
    for (const auto& row : m) {
        if (row.size() != cols) throw DimensionError(std::string(name) + " has the wrong number of columns");
        for (const auto& p : row)
            if (p.nvars() != nvars) throw DimensionError(std::string(name) + " entry has the wrong variable count");
    }
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b, std::size_t rows, std::size_t inner, std::size_t cols,
                  std::size_t nvars) {
    PolyMatrix out(rows, std::vector<Poly>(cols, Poly(nvars)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < inner; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

using ConstMatrix = std::vector<std::vector<GaussianRational>>;

ConstMatrix invert(ConstMatrix m) {
    const std::size_t n = m.size();
    ConstMatrix inv(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DimensionError("gauge matrix must be square");
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw DomainError("gauge matrix is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const GaussianRational s = m[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const GaussianRational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

PolyMatrix to_poly_matrix(const ConstMatrix& m, std::size_t nvars) {
    PolyMatrix out;
    for (const auto& row : m) {
        std::vector<Poly> r;
        for (const auto& c : row) r.push_back(Poly::constant(nvars, c));
        out.push_back(std::move(r));
    }
    return out;
}

bool parity(std::size_t i, std::size_t j, std::size_t row_r0, std::size_t col_r0) {
    return (i >= row_r0) != (j >= col_r0);
}

}  // namespace

MatrixFactorization::MatrixFactorization(std::size_t r0, std::size_t r1, PolyMatrix A, PolyMatrix B, Poly W)
    : r0_(r0), r1_(r1), A_(std::move(A)), B_(std::move(B)), W_(std::move(W)) {
    check_shape(A_, r1_, r0_, W_.nvars(), "A");
    check_shape(B_, r0_, r1_, W_.nvars(), "B");
}

Poly MatrixFactorization::D(std::size_t row, std::size_t col) const {
    const bool row_even = row < r0_;
    const bool col_even = col < r0_;
    if (row_even == col_even) return Poly(nvars());
    if (row_even) return B_[row][col - r0_];
    return A_[row - r0_][col];
}

MatrixFactorization MatrixFactorization::gauge_transform(const ConstMatrix& g0, const ConstMatrix& g1) const {
    if (g0.size() != r0_ || g1.size() != r1_) throw DimensionError("gauge blocks do not match the ranks");
    const std::size_t n = nvars();
    const PolyMatrix G0 = to_poly_matrix(g0, n), G1 = to_poly_matrix(g1, n);
    const PolyMatrix G0i = to_poly_matrix(invert(g0), n), G1i = to_poly_matrix(invert(g1), n);
    PolyMatrix A = matmul(matmul(G1, A_, r1_, r1_, r0_, n), G0i, r1_, r0_, r0_, n);
    PolyMatrix B = matmul(matmul(G0, B_, r0_, r0_, r1_, n), G1i, r0_, r1_, r1_, n);
    return {r0_, r1_, std::move(A), std::move(B), W_};
}

FactorizationCheck verify_factorization(const MatrixFactorization& mf) {
    const std::size_t n = mf.nvars();
    FactorizationCheck out;
    out.ba_residual = matmul(mf.B(), mf.A(), mf.r0(), mf.r1(), mf.r0(), n);
    out.ab_residual = matmul(mf.A(), mf.B(), mf.r1(), mf.r0(), mf.r1(), n);
    for (std::size_t i = 0; i < mf.r0(); ++i) out.ba_residual[i][i] -= mf.W();
    for (std::size_t i = 0; i < mf.r1(); ++i) out.ab_residual[i][i] -= mf.W();
    out.ok = true;
    for (const auto* m : {&out.ba_residual, &out.ab_residual})
        for (const auto& row : *m)
            for (const auto& p : row)
                if (!p.is_zero()) out.ok = false;
    return out;
}

MatrixFactorization quiver_factorization(unsigned n, unsigned k) {
    if (n < 1) throw DomainError("quiver factorization needs n >= 1");
    if (k > n + 1) throw DomainError("quiver factorization needs 0 <= k <= n+1");
    const std::size_t nv = 3;
    const Poly x1 = Poly::variable(nv, 0), x2 = Poly::variable(nv, 1), x3 = Poly::variable(nv, 2);
    const Poly W = x1.pow(n + 1) + x2 * x3;
    PolyMatrix a{{x2, x1.pow(n + 1 - k)}, {x1.pow(k), -x3}};
    PolyMatrix b{{x3, x1.pow(n + 1 - k)}, {x1.pow(k), -x2}};
    return {2, 2, std::move(a), std::move(b), W};
}

MatrixFactorization elementary_factorization(const Poly& u, const Poly& v) {
    if (u.is_zero() || v.is_zero()) throw DomainError("elementary factorization needs nonzero u and v");
    if (u.nvars() != v.nvars()) throw DimensionError("u and v live in different rings");
    return {1, 1, PolyMatrix{{u}}, PolyMatrix{{v}}, u * v};
}

FreeComplex morphism_complex(const MatrixFactorization& a1, const MatrixFactorization& a2) {
    if (a1.nvars() != a2.nvars() || !(a1.W() == a2.W()))
        throw DimensionError("morphisms need factorizations of the same superpotential");
    const std::size_t nv = a1.nvars();
    const std::size_t rank1 = a1.rank(), rank2 = a2.rank();

    std::vector<std::pair<std::size_t, std::size_t>> comps[2];
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index[2];
    for (std::size_t i = 0; i < rank2; ++i)
        for (std::size_t j = 0; j < rank1; ++j) {
            const int p = parity(i, j, a2.r0(), a1.r0()) ? 1 : 0;
            index[p].emplace(std::make_pair(i, j), comps[p].size());
            comps[p].emplace_back(i, j);
        }

    FreeComplex fc;
    fc.nvars = nv;
    fc.periodic = true;
    fc.labels = {0, 1};
    fc.ranks = {comps[0].size(), comps[1].size()};
    for (int p = 0; p < 2; ++p) {
        const int q = 1 - p;
        PolyMatrix m(comps[q].size(), std::vector<Poly>(comps[p].size(), Poly(nv)));
        for (std::size_t c = 0; c < comps[p].size(); ++c) {
            const auto [i, j] = comps[p][c];
            for (std::size_t a = 0; a < rank2; ++a) {
                Poly d = a2.D(a, i);
                if (!d.is_zero()) m[index[q].at({a, j})][c] += d;
            }
            for (std::size_t b = 0; b < rank1; ++b) {
                Poly d = a1.D(j, b);
                if (d.is_zero()) continue;
                if (p == 0) {
                    m[index[q].at({i, b})][c] -= d;
                } else {
                    m[index[q].at({i, b})][c] += d;
                }
            }
        }
        fc.differentials.push_back(std::move(m));
    }
    return fc;
}

TruncatedComplex defect_operator(const MatrixFactorization& a1, const MatrixFactorization& a2, unsigned cap) {
    return truncate(morphism_complex(a1, a2), cap);
}

HomDims hmf_hom_dims(const MatrixFactorization& a1, const MatrixFactorization& a2, std::span<const unsigned> caps,
                     const TruncationOptions& options) {
    HomDims out;
    out.report = stabilized_cohomology(morphism_complex(a1, a2), caps, options);
    out.even = out.report.dims()[0];
    out.odd = out.report.dims()[1];
    out.stabilized = out.report.stabilized;
    out.cap_used = out.report.cap_used;
    return out;
}

FreeComplex disk_complex(const MatrixFactorization& a) {
    const std::size_t d = a.nvars();
    const std::size_t r = a.rank();
    const KoszulComplex koszul(a.W());
    const auto& dW = koszul.partials();

    struct Comp {
        std::vector<std::size_t> form;
        std::size_t i, j;
    };
    std::vector<Comp> comps[2];
    std::map<std::tuple<std::vector<std::size_t>, std::size_t, std::size_t>, std::size_t> index[2];
    for (std::size_t m = 0; m <= d; ++m)
        for (const auto& S : exterior_basis(d, m))
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    const int p = static_cast<int>((m + (parity(i, j, a.r0(), a.r0()) ? 1 : 0)) % 2);
                    index[p].emplace(std::make_tuple(S, i, j), comps[p].size());
                    comps[p].push_back({S, i, j});
                }

    FreeComplex fc;
    fc.nvars = d;
    fc.periodic = true;
    fc.labels = {0, 1};
    fc.ranks = {comps[0].size(), comps[1].size()};
    for (int p = 0; p < 2; ++p) {
        const int q = 1 - p;
        PolyMatrix mat(comps[q].size(), std::vector<Poly>(comps[p].size(), Poly(d)));
        for (std::size_t c = 0; c < comps[p].size(); ++c) {
            const auto& [S, i, j] = comps[p][c];
            // contraction part
            for (std::size_t k = 0; k < S.size(); ++k) {
                std::vector<std::size_t> rest = S;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
                Poly e = dW[S[k]];
                if (k % 2 == 1) e = -e;
                mat[index[q].at({rest, i, j})][c] += e;
            }
            // defect part, with the Koszul sign (-1)^|S|
            const bool end_odd = parity(i, j, a.r0(), a.r0());
            const bool flip = S.size() % 2 == 1;
            for (std::size_t t = 0; t < r; ++t) {
                Poly left = a.D(t, i);
                if (!left.is_zero()) {
                    if (flip) left = -left;
                    mat[index[q].at({S, t, j})][c] += left;
                }
                Poly right = a.D(j, t);
                if (!right.is_zero()) {
                    // -(-1)^|f| f D
                    if (!end_odd) right = -right;
                    if (flip) right = -right;
                    mat[index[q].at({S, i, t})][c] += right;
                }
            }
        }
        fc.differentials.push_back(std::move(mat));
    }
    return fc;
}

DiskReport disk_algebra_dims(const MatrixFactorization& a, std::span<const unsigned> caps,
                             const TruncationOptions& options) {
    DiskReport out;
    const QuotientBasis jac = jacobi_quotient(a.W(), AffineFrame{});
    if (jac.infinite) throw DomainError("Jacobi algebra is infinite-dimensional; critical points are not isolated");
    out.jacobi_dim = jac.dimension();
    out.end_dims = hmf_hom_dims(a, a, caps, options);
    out.predicted = out.jacobi_dim * (out.end_dims.even + out.end_dims.odd);
    out.direct_report = stabilized_cohomology(disk_complex(a), caps, options);
    out.direct_even = out.direct_report.dims()[0];
    out.direct_odd = out.direct_report.dims()[1];
    out.direct = out.direct_even + out.direct_odd;
    out.stabilized = out.end_dims.stabilized && out.direct_report.stabilized;
    if (!out.stabilized) throw InconclusiveError("disk algebra computation did not stabilize over the given caps");
    out.verdict = out.predicted == out.direct;
    return out;
}

}  // namespace lgkit
