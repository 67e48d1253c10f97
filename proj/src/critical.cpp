#include "lgkit/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include <Eigen/Dense>

#include "lgkit/errors.hpp"

namespace lgkit {

namespace {

bool all_zero(std::span<const ExpPoly> eqs) {
    return std::all_of(eqs.begin(), eqs.end(), [](const ExpPoly& e) { return e.is_zero(); });
}

double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const Complex& c : v) {
        const double a = std::abs(c);
        if (!std::isfinite(a)) return std::numeric_limits<double>::infinity();
        m = std::max(m, a);
    }
    return m;
}

double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return s;
}

using Jacobian = std::vector<std::vector<ExpPoly>>;

NewtonResult solve(const ExpPolySystem& sys, const Jacobian& jac, std::span<const Complex> seed,
                   const NewtonOptions& opt) {
    const std::size_t n = sys.nvars;
    const std::size_t m = sys.equations.size();
    NewtonResult out;
    std::vector<Complex> x(seed.begin(), seed.end());
    std::vector<Complex> F = sys.evaluate(x);
    double res = max_abs(F);

    auto finish = [&](bool ok, std::string why, unsigned iters) {
        out.converged = ok;
        out.failure = std::move(why);
        out.point.coords = x;
        out.point.residual = res;
        out.point.iterations = iters;
        // Newton slows to a linear rate exactly where the Jacobian loses rank,
        // so the hint reads the conditioning at the final iterate.
        out.point.multiplicity_hint = 1;
        if (ok) {
            Eigen::MatrixXcd J(m, n);
            for (std::size_t e = 0; e < m; ++e)
                for (std::size_t v = 0; v < n; ++v) J(e, v) = jac[e][v].evaluate(x);
            const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(J).singularValues();
            if (sv.size() == 0 || sv(sv.size() - 1) <= 1e-3 * std::max(1.0, sv(0))) out.point.multiplicity_hint = 2;
        }
        return out;
    };

    if (!std::isfinite(res)) return finish(false, "non-finite residual at seed", 0);

    unsigned polish = 0;
    for (unsigned it = 1; it <= opt.max_iter; ++it) {
        if (res < opt.tol) {
            // Keep refining while each step still gains a factor of two, so
            // that runs from different seeds agree far below the tolerance.
            if (polish >= 3 || res == 0.0) return finish(true, "", it - 1);
        }
        Eigen::MatrixXcd J(m, n);
        Eigen::VectorXcd rhs(m);
        for (std::size_t e = 0; e < m; ++e) {
            rhs(e) = -F[e];
            for (std::size_t v = 0; v < n; ++v) J(e, v) = jac[e][v].evaluate(x);
        }
        if (!J.allFinite()) return finish(false, "non-finite Jacobian", it);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(J);
        qr.setThreshold(1e-13);
        if (qr.rank() < static_cast<Eigen::Index>(n)) {
            if (res < opt.tol) return finish(true, "", it - 1);
            return finish(false, "singular Jacobian", it);
        }
        const Eigen::VectorXcd dx = qr.solve(rhs);

        const double base = norm2(F);
        double step = 1.0;
        std::vector<Complex> trial(n);
        std::vector<Complex> Ft;
        bool accepted = false;
        for (int halvings = 0; halvings < 30; ++halvings, step *= 0.5) {
            for (std::size_t v = 0; v < n; ++v) trial[v] = x[v] + step * dx(static_cast<Eigen::Index>(v));
            Ft = sys.evaluate(trial);
            const double r2 = norm2(Ft);
            if (std::isfinite(r2) && r2 < base) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (res < opt.tol) return finish(true, "", it - 1);
            return finish(false, "line search failed to reduce the residual", it);
        }
        const double previous = res;
        x = trial;
        F = std::move(Ft);
        res = max_abs(F);
        if (res < opt.tol) {
            if (previous < opt.tol && res > 0.5 * previous) return finish(true, "", it);
            ++polish;
        }
    }
    if (res < opt.tol) return finish(true, "", opt.max_iter);
    return finish(false, "maximum iterations reached", opt.max_iter);
}

std::vector<double> axis_samples(std::pair<double, double> range, unsigned grid) {
    if (range.first == range.second || grid <= 1) return {0.5 * (range.first + range.second)};
    std::vector<double> out;
    for (unsigned k = 0; k < grid; ++k)
        out.push_back(range.first + (range.second - range.first) * static_cast<double>(k) / (grid - 1));
    return out;
}

bool lex_less(const CriticalPoint& a, const CriticalPoint& b) {
    for (std::size_t k = 0; k < a.coords.size(); ++k) {
        if (a.coords[k].real() != b.coords[k].real()) return a.coords[k].real() < b.coords[k].real();
        if (a.coords[k].imag() != b.coords[k].imag()) return a.coords[k].imag() < b.coords[k].imag();
    }
    return false;
}

double distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

}  // namespace

std::vector<VectorField> tangent_generators_hypersurface(const ExpPoly& f, std::size_t N) {
    if (N < 2) throw DomainError("tangent generators need at least two ambient variables");
    if (f.nvars() != N) throw DimensionError("f does not live on C^N");
    std::vector<ExpPoly> grad;
    for (std::size_t k = 0; k < N; ++k) grad.push_back(f.derivative(k));
    const ExpPoly zero = ExpPoly::constant(N, GaussianRational(0));
    std::vector<VectorField> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            VectorField v(N, zero);
            v[i] = grad[j];
            v[j] = -grad[i];
            out.push_back(std::move(v));
        }
    return out;
}

CriticalSystem critical_system(const ExpPoly& f, const ExpPoly& W) {
    if (f.nvars() != W.nvars()) throw DimensionError("f and W have different variable counts");
    const std::size_t N = f.nvars();
    if (N < 2) throw DomainError("hypersurface critical system needs at least two variables");
    CriticalSystem out;
    out.system.nvars = N;
    out.system.equations.push_back(f);
    std::vector<ExpPoly> dW, df;
    for (std::size_t k = 0; k < N; ++k) {
        dW.push_back(W.derivative(k));
        df.push_back(f.derivative(k));
    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) out.system.equations.push_back(dW[i] * df[j] - dW[j] * df[i]);
    out.degenerate = all_zero(std::span(out.system.equations).subspan(1));
    return out;
}

CriticalSystem critical_system(std::span<const ExpPoly> equations, std::span<const VectorField> tangent_generators,
                               const ExpPoly& W) {
    const std::size_t N = W.nvars();
    CriticalSystem out;
    out.system.nvars = N;
    for (const auto& e : equations) {
        if (e.nvars() != N) throw DimensionError("defining equation has the wrong variable count");
        out.system.equations.push_back(e);
    }
    std::vector<ExpPoly> dW;
    for (std::size_t k = 0; k < N; ++k) dW.push_back(W.derivative(k));
    for (const auto& v : tangent_generators) {
        if (v.size() != N) throw DimensionError("tangent generator has the wrong number of components");
        std::vector<ExpPoly> terms;
        for (std::size_t k = 0; k < N; ++k) {
            if (v[k].nvars() != N) throw DimensionError("tangent generator component has the wrong variable count");
            terms.push_back(v[k] * dW[k]);
        }
        out.system.equations.push_back(ExpPoly::sum(N, std::move(terms)));
    }
    out.degenerate = all_zero(std::span(out.system.equations).subspan(equations.size()));
    return out;
}

NewtonResult newton_solve(const ExpPolySystem& sys, std::span<const Complex> seed, const NewtonOptions& options) {
    if (seed.size() != sys.nvars) throw DimensionError("seed length differs from the variable count");
    if (sys.equations.size() < sys.nvars) throw DomainError("Newton needs at least as many equations as unknowns");
    return solve(sys, sys.jacobian(), seed, options);
}

ComplexBox ComplexBox::uniform(std::size_t n, std::pair<double, double> re, std::pair<double, double> im) {
    return {std::vector(n, re), std::vector(n, im)};
}

bool ComplexBox::contains(std::span<const Complex> point, double slack) const {
    for (std::size_t k = 0; k < point.size(); ++k) {
        if (point[k].real() < re[k].first - slack || point[k].real() > re[k].second + slack) return false;
        if (point[k].imag() < im[k].first - slack || point[k].imag() > im[k].second + slack) return false;
    }
    return true;
}

bool ComplexBox::contains_origin() const {
    const std::vector<Complex> zero(re.size());
    return contains(zero);
}

std::vector<CriticalPoint> find_critical_points(const ExpPolySystem& sys, const ComplexBox& box,
                                                const MultistartOptions& options) {
    const std::size_t n = sys.nvars;
    if (box.re.size() != n || box.im.size() != n) throw DimensionError("box dimension differs from the variable count");
    if (sys.equations.size() < n) throw DomainError("Newton needs at least as many equations as unknowns");
    if (options.grid < 1) throw DomainError("grid must be at least 1");

    // Seeds: the origin first (when inside), then the full product grid.
    std::vector<std::vector<Complex>> seeds;
    if (box.contains_origin()) seeds.emplace_back(n);
    std::vector<std::vector<Complex>> axes(n);
    for (std::size_t k = 0; k < n; ++k)
        for (double r : axis_samples(box.re[k], options.grid))
            for (double i : axis_samples(box.im[k], options.grid)) axes[k].emplace_back(r, i);
    std::vector<std::size_t> counter(n, 0);
    for (bool done = false; !done;) {
        std::vector<Complex> s(n);
        for (std::size_t k = 0; k < n; ++k) s[k] = axes[k][counter[k]];
        seeds.push_back(std::move(s));
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++counter[k] < axes[k].size()) break;
            counter[k] = 0;
            if (k == 0) done = true;
        }
    }

    const Jacobian jac = sys.jacobian();
    std::vector<NewtonResult> results(seeds.size());
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, seeds.size()));
    auto work = [&](unsigned t) {
        for (std::size_t s = t; s < seeds.size(); s += threads) results[s] = solve(sys, jac, seeds[s], options.newton);
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    const double radius = 10.0 * options.newton.tol;
    std::vector<CriticalPoint> out;
    for (auto& r : results) {
        if (!r.converged || !box.contains(r.point.coords, radius)) continue;
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const CriticalPoint& p) { return distance(p.coords, r.point.coords) < radius; });
        if (!seen) out.push_back(std::move(r.point));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace lgkit
