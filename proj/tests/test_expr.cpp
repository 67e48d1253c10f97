#include <doctest.h>

#include <cmath>
#include <random>

#include "lgkit/errors.hpp"
#include "lgkit/expr.hpp"
#include "lgkit/parse.hpp"
#include "oracles.hpp"

using namespace lgkit;

namespace {

std::vector<Complex> random_point(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<Complex> x(n);
    for (auto& c : x) c = {d(rng), d(rng)};
    return x;
}

}  // namespace

TEST_CASE("expressions: evaluation") {
    const ExpPoly e = parse_expression("x1*exp(x2) + 2*i", 2);
    const std::vector<Complex> pt{{2.0, 0.0}, {0.0, M_PI}};
    const Complex v = e.evaluate(pt);
    CHECK(v.real() == doctest::Approx(-2.0));
    CHECK(v.imag() == doctest::Approx(2.0));
    CHECK(e.contains_exp());
    CHECK_FALSE(parse_expression("x1^2", 1).contains_exp());
}

TEST_CASE("expressions: symbolic derivatives") {
    CHECK(parse_expression("x1^3", 1).derivative(0).to_poly() == parse_poly("3*x1^2", 1));
    CHECK(parse_expression("x1*x2 + x2^2", 2).derivative(1).to_poly() == parse_poly("x1 + 2*x2", 2));
    CHECK(parse_expression("7", 1).derivative(0).is_zero());

    // d/dx1 exp(x1*x2) = x2 exp(x1*x2)
    const ExpPoly e = parse_expression("exp(x1*x2)", 2);
    const ExpPoly d = e.derivative(0);
    const std::vector<Complex> pt{{0.3, -0.2}, {1.1, 0.4}};
    const Complex expected = pt[1] * std::exp(pt[0] * pt[1]);
    CHECK(std::abs(d.evaluate(pt) - expected) < 1e-13);
}

TEST_CASE("expressions: derivatives agree with finite differences") {
    std::mt19937 rng(3);
    const char* samples[] = {
        "x1*exp(x2) - x2^3 + i*x1*x2",
        "exp(x1 + 2*x2)*x1^2 - exp(-x1)",
        "(x1 - x2)^4 + 0.5*x1",
        "exp(exp(x1/3))",
    };
    for (const char* s : samples) {
        const ExpPoly e = parse_expression(s, 2);
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_point(rng, 2);
            for (std::size_t v = 0; v < 2; ++v) {
                const Complex fd = oracle::central_difference(
                    [&](const std::vector<Complex>& p) { return e.evaluate(p); }, x, v, 1e-5);
                const Complex exact = e.derivative(v).evaluate(x);
                CHECK(std::abs(fd - exact) < 1e-6 * std::max(1.0, std::abs(exact)));
            }
        }
    }
}

TEST_CASE("expressions: exact polynomial round trip") {
    const Poly p = parse_poly("x1^2*x2 - (1/3)*i*x2 + 4", 2);
    CHECK(ExpPoly::from_poly(p).to_poly() == p);
    CHECK_THROWS_AS(parse_expression("exp(x1)", 1).to_poly(), DomainError);
    CHECK_THROWS_AS(ExpPoly::constant(1, Complex{0.1, 0.0}).to_poly(), DomainError);
}

TEST_CASE("expressions: systems and Jacobians") {
    ExpPolySystem sys;
    sys.nvars = 2;
    sys.equations = {parse_expression("x1*x2 - 1", 2), parse_expression("x1 - x2", 2)};
    const std::vector<Complex> pt{{2.0, 0.0}, {3.0, 0.0}};
    const auto F = sys.evaluate(pt);
    CHECK(F[0] == Complex{5.0, 0.0});
    CHECK(F[1] == Complex{-1.0, 0.0});
    const auto J = sys.jacobian();
    CHECK(J[0][0].evaluate(pt) == Complex{3.0, 0.0});
    CHECK(J[0][1].evaluate(pt) == Complex{2.0, 0.0});
    CHECK(J[1][1].evaluate(pt) == Complex{-1.0, 0.0});
}
