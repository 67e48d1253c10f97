#include <doctest.h>

#include <random>

#include "lgkit/errors.hpp"
#include "lgkit/koszul.hpp"
#include "lgkit/parse.hpp"
#include "oracles.hpp"

using namespace lgkit;

namespace {

const std::vector<unsigned> kCaps{4, 6, 8};

std::size_t position_zero(const CohomologyReport& r) { return r.dims().back(); }

bool negative_positions_vanish(const CohomologyReport& r) {
    const auto& d = r.dims();
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
        if (d[k] != 0) return false;
    return true;
}

// x -> M x for an integer matrix M with determinant +-1.
Poly change_variables(const Poly& W, const std::vector<std::vector<long>>& M) {
    const std::size_t n = W.nvars();
    std::vector<Poly> images;
    for (std::size_t r = 0; r < n; ++r) {
        Poly img(n);
        for (std::size_t c = 0; c < n; ++c) img += Poly::variable(n, c) * GaussianRational(M[r][c]);
        images.push_back(img);
    }
    return W.substitute(images);
}

std::vector<std::vector<long>> random_unimodular(std::mt19937& rng, std::size_t n) {
    std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
    for (std::size_t k = 0; k < n; ++k) M[k][k] = 1;
    std::uniform_int_distribution<long> c(-2, 2);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    // Products of elementary row operations keep the determinant at 1.
    for (int step = 0; step < 4; ++step) {
        const std::size_t a = idx(rng), b = idx(rng);
        if (a == b) continue;
        const long f = c(rng);
        for (std::size_t k = 0; k < n; ++k) M[a][k] += f * M[b][k];
    }
    return M;
}

}  // namespace

TEST_CASE("exterior basis is lexicographic") {
    const auto b = exterior_basis(3, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == std::vector<std::size_t>{0, 1});
    CHECK(b[1] == std::vector<std::size_t>{0, 2});
    CHECK(b[2] == std::vector<std::size_t>{1, 2});
    CHECK(exterior_basis(4, 0).size() == 1);
    CHECK(exterior_basis(4, 4).size() == 1);
}

TEST_CASE("koszul matrices: univariate truncation") {
    const auto t = build_truncated_koszul(parse_poly("z^2", VariableNames{"z"}), 3);
    REQUIRE(t.maps.size() == 1);
    const SparseMatrix& m = t.maps[0];
    CHECK(m.cols() == 4);
    CHECK(m.rows == 5);
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t r = 0; r < 5; ++r)
            CHECK(m.at(r, c) == (r == c + 1 ? GaussianRational(2) : GaussianRational(0)));
}

TEST_CASE("koszul matrices: contraction signs and square zero") {
    const KoszulComplex k(parse_poly("x^2 + y^2", VariableNames{"x", "y"}));
    const PolyMatrix top = k.contraction(2);
    REQUIRE(top.size() == 2);
    REQUIRE(top[0].size() == 1);
    // e1^e2 -> (2x) e2 - (2y) e1
    CHECK(top[0][0] == parse_poly("-2*y", VariableNames{"x", "y"}));
    CHECK(top[1][0] == parse_poly("2*x", VariableNames{"x", "y"}));
    CHECK(k.free_complex().squares_to_zero());

    // Truncated matrices compose to zero: degree <= 3 into degree <= 4 into degree <= 5.
    const SparseMatrix m2 = truncate_map(top, 2, 1, 3, 4);
    const SparseMatrix m1 = truncate_map(k.contraction(1), 2, 2, 4, 5);
    CHECK(m2.rows == m1.cols());
    CHECK(m1.multiply(m2).is_zero());
    CHECK_FALSE(m2.is_zero());
    CHECK_THROWS_AS(build_truncated_koszul(parse_poly("x^3 + y^2", VariableNames{"x", "y"}), 1), DomainError);

    CHECK_THROWS_AS(KoszulComplex(parse_poly("1", 2)), DomainError);
}

TEST_CASE("koszul matrices: three variables square to zero") {
    for (const char* w : {"x1^3 + x2*x3", "x1*x2*x3 + x1^4 - x2^2", "x1^2*x2 + (1/2)*i*x3^3"}) {
        const KoszulComplex k(parse_poly(w, 3));
        CHECK(k.free_complex().squares_to_zero());
    }
}

TEST_CASE("koszul cohomology: examples") {
    auto r = koszul_cohomology_dims(parse_poly("x^2 + y^2", VariableNames{"x", "y"}), kCaps);
    CHECK(r.positions == std::vector<int>{-2, -1, 0});
    CHECK(r.dims() == std::vector<std::size_t>{0, 0, 1});
    CHECK(r.stabilized);
    CHECK(r.dims_per_cap.at(4) == std::vector<std::size_t>{0, 0, 1});

    r = koszul_cohomology_dims(parse_poly("z^5", VariableNames{"z"}), kCaps);
    CHECK(r.dims() == std::vector<std::size_t>{0, 4});
    CHECK(r.stabilized);

    r = koszul_cohomology_dims(parse_poly("x1^3 + x2*x3", 3), kCaps);
    CHECK(r.positions == std::vector<int>{-3, -2, -1, 0});
    CHECK(r.dims() == std::vector<std::size_t>{0, 0, 0, 2});
    CHECK(r.stabilized);
}

TEST_CASE("koszul cohomology: non-isolated critical locus does not stabilize to Jacobi") {
    // x^2 y: the partials share the factor x, so position -1 carries classes
    // that grow with the cap.
    const auto r = koszul_cohomology_dims(parse_poly("x^2*y", VariableNames{"x", "y"}), kCaps);
    CHECK_FALSE(r.stabilized);
}

TEST_CASE("koszul cohomology: position zero matches the Groebner quotient") {
    const std::vector<std::string> samples{"z^3", "x1^4 + x2^2", "x1^3 + x2^3", "x1^2*x2 + x2^3",
                                           "x1^3 + x2*x3", "x1^2 + x2^2 + x3^2 + x1*x2*x3"};
    for (const auto& w : samples) {
        CAPTURE(w);
        const Poly W = parse_poly(w, infer_variables(std::vector<std::string>{w}));
        const auto r = koszul_cohomology_dims(W, std::vector<unsigned>{6, 8});
        REQUIRE(r.stabilized);
        CHECK(negative_positions_vanish(r));
        const auto q = jacobi_quotient(W, AffineFrame{});
        CHECK(position_zero(r) == q.dimension());
        // And the quotient dimension itself against the brute-force oracle.
        const auto gens = jacobi_ideal(W, AffineFrame{}).generators();
        if (oracle::homogeneous(gens)) CHECK(oracle::truncated_quotient_dim(gens, W.nvars(), 9) == q.dimension());
    }
}

TEST_CASE("koszul cohomology: invariant under unimodular changes of variables") {
    std::mt19937 rng(11);
    for (const char* w : {"x1^3 + x2^2", "x1^3 + x2^3", "x1^2 + x2^2 + x3^2"}) {
        const Poly W = parse_poly(w, infer_variable_count(w));
        const auto base = koszul_cohomology_dims(W, std::vector<unsigned>{6, 8});
        for (int trial = 0; trial < 3; ++trial) {
            const Poly V = change_variables(W, random_unimodular(rng, W.nvars()));
            const auto r = koszul_cohomology_dims(V, std::vector<unsigned>{6, 8});
            CHECK(r.stabilized);
            CHECK(r.dims() == base.dims());
        }
    }
}

TEST_CASE("koszul cohomology: matrix size limit") {
    TruncationOptions opts;
    opts.max_matrix_dim = 10;
    CHECK_THROWS_AS(koszul_cohomology_dims(parse_poly("x1^3 + x2*x3", 3), kCaps, opts), ResourceLimitError);
}
