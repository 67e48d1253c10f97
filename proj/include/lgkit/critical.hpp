#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgkit/expr.hpp"

namespace lgkit {

/// A vector field on C^N, one component per coordinate.
using VectorField = std::vector<ExpPoly>;

/// The fields v_ij (i < j, lexicographic) tangent to the level sets of f:
/// d_j f in slot i, -d_i f in slot j, zero elsewhere.
std::vector<VectorField> tangent_generators_hypersurface(const ExpPoly& f, std::size_t N);

struct CriticalSystem {
    ExpPolySystem system;
    /// Set when every equation past the defining ones is identically zero,
    /// which happens when dW vanishes identically (W constant).
    bool degenerate = false;
};

/// Critical locus of W restricted to {f = 0}: the equation f followed by
/// d_i W d_j f - d_j W d_i f for i < j.
CriticalSystem critical_system(const ExpPoly& f, const ExpPoly& W);

/// Complete-intersection variant: the defining equations followed by the
/// contraction of dW against each supplied tangent generator.
CriticalSystem critical_system(std::span<const ExpPoly> equations, std::span<const VectorField> tangent_generators,
                               const ExpPoly& W);

inline ExpPoly derivative(const ExpPoly& e, std::size_t var) { return e.derivative(var); }

struct NewtonOptions {
    double tol = 1e-10;
    unsigned max_iter = 60;
};

struct CriticalPoint {
    std::vector<Complex> coords;
    double residual = 0.0;           // max |equation value|
    unsigned multiplicity_hint = 1;  // 2 when the Jacobian is numerically rank-deficient (linear convergence)
    unsigned iterations = 0;
};

struct NewtonResult {
    bool converged = false;
    std::string failure;  // reason when not converged
    CriticalPoint point;  // last iterate; a genuine critical point only when converged
};

/// Damped Gauss-Newton on the holomorphic residual. Each step solves the
/// complex least-squares problem J dx = -F by column-pivoted QR and halves the
/// step until the residual norm decreases. Fails on a rank-deficient Jacobian,
/// non-finite values or when max_iter is reached.
NewtonResult newton_solve(const ExpPolySystem& sys, std::span<const Complex> seed, const NewtonOptions& options = {});

/// Rectangular region of C^N: per coordinate a real interval and an imaginary
/// interval (a degenerate interval pins that part).
struct ComplexBox {
    std::vector<std::pair<double, double>> re;
    std::vector<std::pair<double, double>> im;

    static ComplexBox uniform(std::size_t n, std::pair<double, double> re, std::pair<double, double> im = {0.0, 0.0});
    bool contains(std::span<const Complex> point, double slack = 0.0) const;
    bool contains_origin() const;
};

struct MultistartOptions {
    NewtonOptions newton;
    unsigned grid = 5;     // seeds per non-degenerate interval
    unsigned threads = 0;  // 0 picks std::thread::hardware_concurrency()
};

/// Newton from every grid seed (plus the origin when it lies in the box).
/// Converged points inside the box are deduplicated within 10*tol in seed order
/// and returned sorted lexicographically by (re, im) of each coordinate.
std::vector<CriticalPoint> find_critical_points(const ExpPolySystem& sys, const ComplexBox& box,
                                                const MultistartOptions& options = {});

}  // namespace lgkit
