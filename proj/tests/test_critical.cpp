#include <doctest.h>

#include <cmath>
#include <random>

#include "lgkit/critical.hpp"
#include "lgkit/errors.hpp"
#include "lgkit/parse.hpp"

using namespace lgkit;

namespace {

ExpPolySystem univariate(const std::string& text) {
    ExpPolySystem sys;
    sys.nvars = 1;
    sys.equations = {parse_expression(text, VariableNames{"z"})};
    return sys;
}

const char* kF = "x1*exp(x2) + x2*exp(x3) + x3*exp(x1)";

std::string quiver_W(unsigned n) { return "x1^" + std::to_string(n + 1) + " + x2*x3"; }

// The same system written out by hand for W = x1^(n+1) + x2 x3.
std::vector<Complex> hand_system(unsigned n, const std::vector<Complex>& x) {
    const Complex e1 = std::exp(x[0]), e2 = std::exp(x[1]), e3 = std::exp(x[2]);
    const Complex f = x[0] * e2 + x[1] * e3 + x[2] * e1;
    const Complex f1 = e2 + x[2] * e1, f2 = x[0] * e2 + e3, f3 = x[1] * e3 + e1;
    const Complex w1 = static_cast<double>(n + 1) * std::pow(x[0], static_cast<int>(n)), w2 = x[2], w3 = x[1];
    return {f, w1 * f2 - w2 * f1, w1 * f3 - w3 * f1, w2 * f3 - w3 * f2};
}

double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace

TEST_CASE("tangent generators of a hypersurface") {
    const ExpPoly f = parse_expression("x1*x2 + x3^2", 3);
    const auto gens = tangent_generators_hypersurface(f, 3);
    REQUIRE(gens.size() == 3);
    const std::vector<Complex> p{{1.0, 0.5}, {-2.0, 0.0}, {0.25, 1.0}};
    // v_12 = (d2 f, -d1 f, 0)
    CHECK(std::abs(gens[0][0].evaluate(p) - p[0]) < 1e-15);
    CHECK(std::abs(gens[0][1].evaluate(p) + p[1]) < 1e-15);
    CHECK(gens[0][2].is_zero());
    // Every generator annihilates df.
    for (const auto& v : gens) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += v[k].evaluate(p) * f.derivative(k).evaluate(p);
        CHECK(std::abs(s) < 1e-14);
    }
    CHECK_THROWS_AS(tangent_generators_hypersurface(parse_expression("x1", 1), 1), DomainError);
}

TEST_CASE("critical system of the exponential hypersurface") {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (unsigned n = 1; n <= 3; ++n) {
        const auto cs = critical_system(parse_expression(kF, 3), parse_expression(quiver_W(n), 3));
        REQUIRE(cs.system.equations.size() == 4);
        CHECK_FALSE(cs.degenerate);
        for (int trial = 0; trial < 5; ++trial) {
            const std::vector<Complex> x{{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}};
            const auto lib = cs.system.evaluate(x);
            const auto ref = hand_system(n, x);
            for (std::size_t e = 0; e < 4; ++e) CHECK(std::abs(lib[e] - ref[e]) < 1e-12 * std::max(1.0, std::abs(ref[e])));
        }
    }
    CHECK(critical_system(parse_expression(kF, 3), parse_expression("5", 3)).degenerate);
    CHECK_THROWS_AS(critical_system(parse_expression("x1", 1), parse_expression("x1", 1)), DomainError);
}

TEST_CASE("complete-intersection critical system matches the hypersurface one") {
    const ExpPoly f = parse_expression("x1*x2*x3 - 1", 3);
    const ExpPoly W = parse_expression("x1 + x2 + x3", 3);
    const std::vector<ExpPoly> eqs{f};
    const auto gens = tangent_generators_hypersurface(f, 3);
    const auto ci = critical_system(eqs, gens, W);
    const auto hs = critical_system(f, W);
    const std::vector<Complex> p{{0.3, 0.1}, {1.2, -0.4}, {-0.7, 0.9}};
    const auto a = ci.system.evaluate(p), b = hs.system.evaluate(p);
    REQUIRE(a.size() == b.size());
    for (std::size_t e = 0; e < a.size(); ++e) CHECK(std::abs(a[e] - b[e]) < 1e-14);
}

TEST_CASE("newton: simple and double roots") {
    const std::vector<Complex> one{{1.0, 0.0}};
    auto r = newton_solve(univariate("z^2 - 2"), one);
    REQUIRE(r.converged);
    CHECK(std::abs(r.point.coords[0] - std::sqrt(2.0)) < 1e-12);
    CHECK(r.point.residual < 1e-10);
    CHECK(r.point.multiplicity_hint == 1);

    r = newton_solve(univariate("z^2"), one);
    REQUIRE(r.converged);
    CHECK(std::abs(r.point.coords[0]) < 1e-4);
    CHECK(r.point.multiplicity_hint == 2);

    r = newton_solve(univariate("exp(z) - 1"), std::vector<Complex>{{0.5, 0.3}});
    REQUIRE(r.converged);
    CHECK(std::abs(r.point.coords[0]) < 1e-12);
}

TEST_CASE("newton: failures are reported, not thrown") {
    auto r = newton_solve(univariate("z^2 - 1"), std::vector<Complex>{{0.0, 0.0}});
    CHECK_FALSE(r.converged);
    CHECK(r.failure == "singular Jacobian");

    r = newton_solve(univariate("exp(z)"), std::vector<Complex>{{0.0, 0.0}}, NewtonOptions{1e-10, 5});
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.failure.empty());

    CHECK_THROWS_AS(newton_solve(univariate("z"), std::vector<Complex>{}), DimensionError);
}

TEST_CASE("multistart: roots of a cubic, sorted and deduplicated") {
    const auto sys = univariate("z^3 - z");
    MultistartOptions opt;
    opt.grid = 7;
    const auto pts = find_critical_points(sys, ComplexBox::uniform(1, {-2.0, 2.0}, {-2.0, 2.0}), opt);
    REQUIRE(pts.size() == 3);
    CHECK(std::abs(pts[0].coords[0] + 1.0) < 1e-12);
    CHECK(std::abs(pts[1].coords[0]) < 1e-12);
    CHECK(std::abs(pts[2].coords[0] - 1.0) < 1e-12);

    // Only points inside the box are kept.
    const auto right = find_critical_points(sys, ComplexBox::uniform(1, {0.5, 2.0}, {-0.5, 0.5}), opt);
    REQUIRE(right.size() == 1);
    CHECK(std::abs(right[0].coords[0] - 1.0) < 1e-12);
}

TEST_CASE("multistart: the torus mirror has three critical points") {
    const auto cs = critical_system(parse_expression("x1*x2*x3 - 1", 3), parse_expression("x1 + x2 + x3", 3));
    MultistartOptions opt;
    opt.grid = 3;
    const auto pts = find_critical_points(cs.system, ComplexBox::uniform(3, {-2.0, 2.0}, {-2.0, 2.0}), opt);
    CHECK(pts.size() == 3);
    // They are (w, w, w) for the cube roots of unity w.
    for (const auto& p : pts) {
        CHECK(std::abs(p.coords[0] - p.coords[1]) < 1e-9);
        CHECK(std::abs(p.coords[1] - p.coords[2]) < 1e-9);
        CHECK(std::abs(std::pow(p.coords[0], 3) - 1.0) < 1e-9);
    }
}

TEST_CASE("multistart: results do not depend on the thread count") {
    const auto cs = critical_system(parse_expression(kF, 3), parse_expression(quiver_W(2), 3));
    MultistartOptions one, many;
    one.grid = many.grid = 3;
    one.threads = 1;
    many.threads = 4;
    const auto box = ComplexBox::uniform(3, {-3.0, 3.0}, {-3.0, 3.0});
    const auto a = find_critical_points(cs.system, box, one);
    const auto b = find_critical_points(cs.system, box, many);
    REQUIRE(a.size() == b.size());
    CHECK_FALSE(a.empty());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].coords == b[k].coords);
        CHECK(max_abs(hand_system(2, a[k].coords)) < 1e-9);
    }
}
