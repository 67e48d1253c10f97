#include "lgkit/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "lgkit/errors.hpp"

namespace lgkit {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

double rel_gap(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

void require_strip(Complex z, const ThetaSeriesParams& params) {
    const double bound = theta_tail_bound(params.n_max, std::abs(z.imag()));
    if (!(bound <= params.max_tail)) {
        std::ostringstream msg;
        msg << "theta argument with Im = " << z.imag() << " is outside the strip covered by n_max = " << params.n_max
            << " (tail bound " << bound << " > " << params.max_tail << ")";
        throw DomainError(msg.str());
    }
}

}  // namespace

double theta_tail_bound(int n_max, double y) {
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    // For n > N the terms of index n and -n are each at most
    // exp(-pi n^2 + 2 pi n y); successive ratios are at most q.
    const double N1 = n_max + 1.0;
    const double log_q = -pi * (2.0 * N1 + 1.0) + 2.0 * pi * y;
    if (log_q >= 0.0) return std::numeric_limits<double>::infinity();
    const double first = std::exp(-pi * N1 * N1 + 2.0 * pi * N1 * y);
    return 2.0 * first / (1.0 - std::exp(log_q));
}

ThetaValue theta_eval(Complex z, const ThetaSeriesParams& params) {
    require_strip(z, params);
    Complex sum = 1.0;
    for (int n = 1; n <= params.n_max; ++n) {
        const double a = -pi * n * n;
        sum += std::exp(a + 2.0 * pi * I * static_cast<double>(n) * z) +
               std::exp(a - 2.0 * pi * I * static_cast<double>(n) * z);
    }
    return {sum, theta_tail_bound(params.n_max, std::abs(z.imag()))};
}

TorusPoint TorusPoint::canonical() const {
    auto reduce = [](Complex z) { return Complex(z.real() - std::floor(z.real()), z.imag()); };
    return {reduce(z1), reduce(z2)};
}

Complex section_eval(Section kind, const TorusPoint& p, const ThetaSeriesParams& params) {
    switch (kind) {
        case Section::f_plus:
            return theta_eval(p.z1 + I * p.z2, params).value;
        case Section::f_minus:
            return theta_eval(p.z1 - I * p.z2, params).value;
        case Section::S:
            return std::exp(-2.0 * pi * p.z2 * p.z2);
        case Section::W_tilde:
            return section_eval(Section::S, p, params) * section_eval(Section::f_plus, p, params) *
                   section_eval(Section::f_minus, p, params);
    }
    throw DomainError("unknown section");
}

Complex w_tilde_double_series(const TorusPoint& p, const ThetaSeriesParams& params) {
    require_strip(p.z1 + I * p.z2, params);
    require_strip(p.z1 - I * p.z2, params);
    Complex sum = 0.0;
    for (int m = -params.n_max; m <= params.n_max; ++m)
        for (int n = -params.n_max; n <= params.n_max; ++n)
            sum += std::exp(-pi * (m * m + n * n) + 2.0 * pi * I * static_cast<double>(m + n) * p.z1 -
                            2.0 * pi * static_cast<double>(m - n) * p.z2);
    return section_eval(Section::S, p, params) * sum;
}

ThetaFactorizationReport verify_theta_factorization(std::span<const TorusPoint> points, double tol,
                                                    const ThetaSeriesParams& params) {
    ThetaFactorizationReport r;
    r.samples = points.size();
    for (const auto& p : points) {
        const Complex sp = section_eval(Section::f_plus, p, params);
        const Complex sm = section_eval(Section::f_minus, p, params);
        const Complex S = section_eval(Section::S, p, params);
        const Complex w = w_tilde_double_series(p, params);
        r.chart_identity = std::max(r.chart_identity, std::abs(S * sp * sm - w) / std::max(1.0, std::abs(w)));

        // D^2 for D = [[0, s-], [s+, 0]] is diag(s- s+, s+ s-); in this chart it
        // must be W_tilde / S on both summands.
        const Complex target = w / S;
        const Complex d2[2][2] = {{sm * sp, 0.0}, {0.0, sp * sm}};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const Complex expected = a == b ? target : Complex(0.0);
                r.d_squared = std::max(r.d_squared, std::abs(d2[a][b] - expected) / std::max(1.0, std::abs(target)));
            }
    }
    r.ok = r.chart_identity < tol && r.d_squared < tol;
    return r;
}

ThetaCheckReport theta_check(std::size_t samples, double tol, std::uint64_t seed, const ThetaSeriesParams& params) {
    ThetaCheckReport r;
    r.samples = samples;
    r.tol = tol;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0), strip(-1.0, 1.0);
    auto draw = [&] { return Complex(unit(rng), strip(rng)); };
    auto theta = [&](Complex z) { return theta_eval(z, params).value; };

    r.theta_zero = std::abs(theta(Complex(0.5, 0.5)));
    std::vector<TorusPoint> points;
    for (std::size_t k = 0; k < samples; ++k) {
        const Complex z = draw();
        r.theta_period_real = std::max(r.theta_period_real, rel_gap(theta(z + 1.0), theta(z)));
        r.theta_period_imag =
            std::max(r.theta_period_imag, rel_gap(theta(z + I), std::exp(pi - 2.0 * pi * I * z) * theta(z)));
        r.theta_even = std::max(r.theta_even, rel_gap(theta(-z), theta(z)));

        // Keep |Re z2| small enough that both theta arguments stay in the strip
        // after the z2 -> z2 + 1 shift.
        const TorusPoint p{draw(), Complex(unit(rng) - 0.5, 0.5 * strip(rng))};
        const Complex w = section_eval(Section::W_tilde, p, params);
        r.w_period_z1 = std::max(r.w_period_z1,
                                 rel_gap(section_eval(Section::W_tilde, {p.z1 + 1.0, p.z2}, params), w));
        r.w_period_z2 = std::max(r.w_period_z2,
                                 rel_gap(section_eval(Section::W_tilde, {p.z1, p.z2 + 1.0}, params), w));
        points.push_back(p);
    }
    r.factorization = verify_theta_factorization(points, tol, params);
    r.ok = r.theta_period_real < tol && r.theta_period_imag < tol && r.theta_even < tol && r.theta_zero < tol &&
           r.w_period_z1 < tol && r.w_period_z2 < tol && r.factorization.ok;
    return r;
}

}  // namespace lgkit
