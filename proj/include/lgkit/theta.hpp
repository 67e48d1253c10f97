#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace lgkit {

using Complex = std::complex<double>;

struct ThetaSeriesParams {
    int n_max = 8;            // partial sum over |n| <= n_max
    double max_tail = 1e-13;  // largest admissible tail bound
};

struct ThetaValue {
    Complex value;
    double tail_bound = 0.0;  // rigorous bound on |theta(z) - value|
};

/// Bound on sum_{|n| > n_max} |exp(-pi n^2 + 2 pi i n z)| for |Im z| = y.
/// Infinite when the geometric majorant does not converge.
double theta_tail_bound(int n_max, double y);

/// theta(z) = sum_n exp(-pi n^2 + 2 pi i n z), the theta function at tau = i.
/// Throws DomainError when the tail bound exceeds params.max_tail (z is outside
/// the strip the truncation covers).
ThetaValue theta_eval(Complex z, const ThetaSeriesParams& params = {});

/// Point of C^2 seen as a point of C^2 / Z^2 (real translations).
struct TorusPoint {
    Complex z1, z2;

    /// Representative with both real parts in [0, 1).
    TorusPoint canonical() const;
};

enum class Section { f_plus, f_minus, S, W_tilde };

/// f_plus = theta(z1 + i z2), f_minus = theta(z1 - i z2), S = exp(-2 pi z2^2),
/// W_tilde = S f_plus f_minus.
Complex section_eval(Section kind, const TorusPoint& p, const ThetaSeriesParams& params = {});

/// W_tilde from the double series
///   S(z2) * sum_{m,n} exp(-pi (m^2 + n^2) + 2 pi i (m + n) z1 - 2 pi (m - n) z2),
/// which never forms f_plus or f_minus; used as an independent reference.
Complex w_tilde_double_series(const TorusPoint& p, const ThetaSeriesParams& params = {});

struct ThetaFactorizationReport {
    std::size_t samples = 0;
    /// max relative gap |S s+ s- - W_tilde| / max(1, |W_tilde|) against the double series
    double chart_identity = 0.0;
    /// max entry of D^2 - (W_tilde / S) id with D = [[0, s-], [s+, 0]]
    double d_squared = 0.0;
    bool ok = false;
};

/// Checks the elementary factorization D = [[0, s-], [s+, 0]] of W_tilde at
/// each point. Throws DomainError when a point is outside the strip.
ThetaFactorizationReport verify_theta_factorization(std::span<const TorusPoint> points, double tol,
                                                    const ThetaSeriesParams& params = {});

/// Relative residuals of the identities the construction rests on, each the
/// maximum over the samples of |lhs - rhs| / max(1, |lhs|, |rhs|).
struct ThetaCheckReport {
    std::size_t samples = 0;
    double theta_period_real = 0.0;  // theta(z + 1) vs theta(z)
    double theta_period_imag = 0.0;  // theta(z + i) vs exp(pi - 2 pi i z) theta(z)
    double theta_even = 0.0;         // theta(-z) vs theta(z)
    double theta_zero = 0.0;         // |theta((1 + i) / 2)|
    double w_period_z1 = 0.0;        // W_tilde(z1 + 1, z2) vs W_tilde(z1, z2)
    double w_period_z2 = 0.0;        // W_tilde(z1, z2 + 1) vs W_tilde(z1, z2)
    ThetaFactorizationReport factorization;
    double tol = 0.0;
    bool ok = false;
};

/// Samples points with real parts in [0, 1) and imaginary parts in [-1, 1]
/// from a fixed seed and runs every check; ok when all residuals are below tol.
ThetaCheckReport theta_check(std::size_t samples, double tol, std::uint64_t seed = 20240607,
                             const ThetaSeriesParams& params = {});

}  // namespace lgkit
