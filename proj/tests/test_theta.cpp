#include <doctest.h>

#include <cmath>
#include <random>

#include "lgkit/errors.hpp"
#include "lgkit/theta.hpp"

using namespace lgkit;

namespace {

const Complex I{0.0, 1.0};

// Jacobi triple product with q = exp(-pi):
//   theta(z) = prod_m (1 - q^(2m)) (1 + q^(2m-1) e^(2 pi i z)) (1 + q^(2m-1) e^(-2 pi i z)).
Complex triple_product(Complex z) {
    const double q = std::exp(-M_PI);
    const Complex a = std::exp(2.0 * M_PI * I * z), b = std::exp(-2.0 * M_PI * I * z);
    Complex p = 1.0;
    for (int m = 1; m <= 30; ++m) {
        const double q2m = std::pow(q, 2 * m), q2m1 = std::pow(q, 2 * m - 1);
        p *= (1.0 - q2m) * (1.0 + q2m1 * a) * (1.0 + q2m1 * b);
    }
    return p;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

std::vector<Complex> strip_points(std::mt19937& rng, std::size_t n, double half_width) {
    std::uniform_real_distribution<double> re(0.0, 1.0), im(-half_width, half_width);
    std::vector<Complex> out;
    for (std::size_t k = 0; k < n; ++k) out.emplace_back(re(rng), im(rng));
    return out;
}

}  // namespace

TEST_CASE("theta: agrees with the triple product") {
    std::mt19937 rng(1);
    for (Complex z : strip_points(rng, 30, 1.0)) CHECK(rel(theta_eval(z).value, triple_product(z)) < 1e-13);
}

TEST_CASE("theta: zero, periodicity and parity") {
    CHECK(std::abs(theta_eval({0.5, 0.5}).value) < 1e-12);
    std::mt19937 rng(2);
    for (Complex z : strip_points(rng, 20, 0.5)) {
        const Complex t = theta_eval(z).value;
        CHECK(std::abs(theta_eval(z + 1.0).value - t) < 1e-12);
        CHECK(std::abs(theta_eval(z + I).value - std::exp(M_PI - 2.0 * M_PI * I * z) * t) <
              1e-10 * std::max(1.0, std::abs(t)));
        CHECK(std::abs(theta_eval(-z).value - t) < 1e-12);
    }
}

TEST_CASE("theta: tail bound and strip") {
    const ThetaValue v = theta_eval({0.2, 0.9});
    CHECK(v.tail_bound > 0.0);
    CHECK(v.tail_bound < 1e-13);
    CHECK(theta_tail_bound(8, 0.0) < std::exp(-M_PI * 80.0));
    CHECK(std::isinf(theta_tail_bound(2, 10.0)));
    CHECK_THROWS_AS(theta_eval({0.3, 10.0}), DomainError);

    // Truncation error shrinks as n_max grows and stays under the bound.
    const Complex z{0.37, 1.4};
    const Complex exact = triple_product(z);
    double previous = 1.0;
    for (int n = 2; n <= 6; ++n) {
        const ThetaSeriesParams p{n, 1.0};
        const ThetaValue t = theta_eval(z, p);
        const double err = std::abs(t.value - exact);
        CHECK(err <= t.tail_bound + 1e-13);
        CHECK(t.tail_bound < previous);
        previous = t.tail_bound;
    }
}

TEST_CASE("sections on the torus") {
    const TorusPoint zero{{0.5, 0.5}, {0.0, 0.0}};
    CHECK(std::abs(section_eval(Section::f_plus, zero)) < 1e-12);
    CHECK(std::abs(section_eval(Section::f_minus, zero)) < 1e-12);
    CHECK(std::abs(section_eval(Section::W_tilde, zero)) < 1e-12);

    const TorusPoint p{{0.3, 0.1}, {-0.2, 0.15}};
    const Complex s = section_eval(Section::S, p);
    CHECK(rel(s, std::exp(-2.0 * M_PI * p.z2 * p.z2)) < 1e-15);
    CHECK(rel(section_eval(Section::f_plus, p), triple_product(p.z1 + I * p.z2)) < 1e-13);
    CHECK(rel(section_eval(Section::W_tilde, p), w_tilde_double_series(p)) < 1e-12);

    const TorusPoint c = TorusPoint{{2.25, 0.1}, {-1.5, 0.3}}.canonical();
    CHECK(c.z1.real() == doctest::Approx(0.25));
    CHECK(c.z2.real() == doctest::Approx(0.5));
    CHECK(c.z1.imag() == doctest::Approx(0.1));

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0), h(-0.3, 0.3);
    for (int k = 0; k < 20; ++k) {
        const TorusPoint q{{u(rng), h(rng)}, {u(rng), h(rng)}};
        const Complex w = section_eval(Section::W_tilde, q);
        CHECK(rel(section_eval(Section::W_tilde, {q.z1 + 1.0, q.z2}), w) < 1e-10);
        CHECK(rel(section_eval(Section::W_tilde, {q.z1, q.z2 + 1.0}), w) < 1e-8);
    }
}

TEST_CASE("theta factorization") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0), h(-0.3, 0.3);
    std::vector<TorusPoint> pts;
    for (int k = 0; k < 50; ++k) pts.push_back({{u(rng), h(rng)}, {u(rng), h(rng)}});
    pts.push_back({{0.5, 0.5}, {0.0, 0.0}});
    const auto r = verify_theta_factorization(pts, 1e-8);
    CHECK(r.samples == pts.size());
    CHECK(r.ok);
    CHECK(r.chart_identity < 1e-8);
    CHECK(r.d_squared < 1e-8);

    const std::vector<TorusPoint> far{{{0.1, 20.0}, {0.0, 0.0}}};
    CHECK_THROWS_AS(verify_theta_factorization(far, 1e-8), DomainError);
}

TEST_CASE("theta check report") {
    const auto r = theta_check(100, 1e-10);
    CHECK(r.samples == 100);
    CHECK(r.ok);
    CHECK(r.theta_zero < 1e-12);
    CHECK(r.theta_period_real < 1e-10);
    CHECK(r.theta_period_imag < 1e-10);
    CHECK(r.w_period_z1 < 1e-10);
    CHECK(r.w_period_z2 < 1e-10);
    // Fixed seed: identical reports.
    const auto again = theta_check(100, 1e-10);
    CHECK(again.theta_period_imag == r.theta_period_imag);
    CHECK(again.factorization.chart_identity == r.factorization.chart_identity);
}
