#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lgkit/arrangement.hpp"
#include "lgkit/critical.hpp"
#include "lgkit/errors.hpp"
#include "lgkit/factorization.hpp"
#include "lgkit/koszul.hpp"
#include "lgkit/parse.hpp"
#include "lgkit/problem.hpp"
#include "lgkit/theta.hpp"

namespace py = pybind11;
using namespace lgkit;

namespace {

VariableNames names_or_inferred(const std::vector<std::string>& given, std::vector<std::string> texts) {
    return given.empty() ? infer_variables(texts) : given;
}

Arrangement make_arrangement(const std::vector<std::vector<std::string>>& forms) {
    if (forms.empty()) throw DomainError("arrangement needs at least one form");
    std::vector<RationalRow> rows;
    for (const auto& f : forms) {
        RationalRow r;
        for (const auto& c : f) {
            mpq_class q;
            if (q.set_str(c, 10) != 0 || sgn(q.get_den()) == 0) throw ParseError("invalid rational '" + c + "'");
            q.canonicalize();
            r.push_back(q);
        }
        rows.push_back(std::move(r));
    }
    return {rows.front().size(), std::move(rows)};
}

MatrixFactorization make_factorization(std::size_t r0, std::size_t r1, const std::vector<std::vector<std::string>>& A,
                                       const std::vector<std::vector<std::string>>& B, const std::string& W,
                                       const VariableNames& names) {
    auto conv = [&](const std::vector<std::vector<std::string>>& m) {
        PolyMatrix out;
        for (const auto& row : m) {
            std::vector<Poly> r;
            for (const auto& e : row) r.push_back(parse_poly(e, names));
            out.push_back(std::move(r));
        }
        return out;
    };
    return {r0, r1, conv(A), conv(B), parse_poly(W, names)};
}

}  // namespace

PYBIND11_MODULE(_lgkit, m) {
    m.doc() = "Exact and numerical invariants of Landau-Ginzburg models";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InconclusiveError>(m, "InconclusiveError", PyExc_RuntimeError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

    m.attr("__version__") = version();

    m.def(
        "jacobi_quotient",
        [](const std::string& W, std::vector<std::string> variables, const std::string& f) {
            const VariableNames names = names_or_inferred(variables, {W, f});
            FrameSpec frame = AffineFrame{};
            if (!f.empty()) frame = HypersurfaceFrame{parse_poly(f, names)};
            const QuotientBasis q = jacobi_quotient(parse_poly(W, names), frame);
            py::dict d;
            d["infinite"] = q.infinite;
            d["dimension"] = q.infinite ? py::object(py::none()) : py::object(py::int_(q.dimension()));
            std::vector<std::string> basis;
            for (const auto& mono : q.standard_monomials) basis.push_back(mono.to_string(names));
            d["basis"] = basis;
            return d;
        },
        py::arg("W"), py::arg("variables") = std::vector<std::string>{}, py::arg("f") = "",
        "Dimension and standard monomials of the Jacobi algebra (hypersurface frame when f is given).");

    m.def(
        "koszul_cohomology",
        [](const std::string& W, std::vector<unsigned> caps, std::vector<std::string> variables) {
            const VariableNames names = names_or_inferred(variables, {W});
            const CohomologyReport r = koszul_cohomology_dims(parse_poly(W, names), caps);
            py::dict d;
            d["positions"] = r.positions;
            d["dims"] = r.dims();
            d["stabilized"] = r.stabilized;
            return d;
        },
        py::arg("W"), py::arg("caps") = std::vector<unsigned>{4, 6, 8},
        py::arg("variables") = std::vector<std::string>{});

    m.def(
        "critical_points",
        [](const std::string& f, const std::string& W, std::pair<double, double> re, std::pair<double, double> im,
           unsigned grid, double tol, std::vector<std::string> variables) {
            const VariableNames names = names_or_inferred(variables, {f, W});
            const CriticalSystem cs = critical_system(parse_expression(f, names), parse_expression(W, names));
            MultistartOptions opt;
            opt.grid = grid;
            opt.newton.tol = tol;
            std::vector<std::vector<Complex>> out;
            for (const auto& p : find_critical_points(cs.system, ComplexBox::uniform(names.size(), re, im), opt))
                out.push_back(p.coords);
            return out;
        },
        py::arg("f"), py::arg("W"), py::arg("re") = std::pair{-3.0, 3.0}, py::arg("im") = std::pair{-3.0, 3.0},
        py::arg("grid") = 5, py::arg("tol") = 1e-10, py::arg("variables") = std::vector<std::string>{},
        "Critical points of W on {f = 0} found by multistart Newton, sorted lexicographically.");

    m.def(
        "verify_factorization",
        [](std::size_t r0, std::size_t r1, const std::vector<std::vector<std::string>>& A,
           const std::vector<std::vector<std::string>>& B, const std::string& W, std::vector<std::string> variables) {
            std::vector<std::string> texts{W};
            for (const auto* mat : {&A, &B})
                for (const auto& row : *mat) texts.insert(texts.end(), row.begin(), row.end());
            const VariableNames names = names_or_inferred(variables, texts);
            return verify_factorization(make_factorization(r0, r1, A, B, W, names)).ok;
        },
        py::arg("r0"), py::arg("r1"), py::arg("A"), py::arg("B"), py::arg("W"),
        py::arg("variables") = std::vector<std::string>{});

    m.def(
        "quiver_factorization_ok", [](unsigned n, unsigned k) { return verify_factorization(quiver_factorization(n, k)).ok; },
        py::arg("n"), py::arg("k"));

    m.def(
        "elementary_hom_dims",
        [](const std::string& u, const std::string& v, std::vector<unsigned> caps) {
            const VariableNames names = infer_variables(std::vector<std::string>{u, v});
            const auto a = elementary_factorization(parse_poly(u, names), parse_poly(v, names));
            const HomDims h = hmf_hom_dims(a, a, caps);
            return py::make_tuple(h.even, h.odd, h.stabilized);
        },
        py::arg("u"), py::arg("v"), py::arg("caps") = std::vector<unsigned>{4, 6, 8},
        "(even, odd, stabilized) self-hom dimensions of the rank (1,1) factorization [[0, v], [u, 0]].");

    m.def(
        "elementary_disk_dims",
        [](const std::string& u, const std::string& v, std::vector<unsigned> caps) {
            const VariableNames names = infer_variables(std::vector<std::string>{u, v});
            const auto a = elementary_factorization(parse_poly(u, names), parse_poly(v, names));
            const DiskReport r = disk_algebra_dims(a, caps);
            return py::make_tuple(r.predicted, r.direct);
        },
        py::arg("u"), py::arg("v"), py::arg("caps") = std::vector<unsigned>{4, 6, 8},
        "(predicted, direct) disk algebra dimensions.");

    m.def(
        "poincare_polynomial", [](const std::vector<std::vector<std::string>>& forms) {
            return poincare_polynomial(make_arrangement(forms));
        },
        py::arg("forms"));
    m.def(
        "os_ranks", [](const std::vector<std::vector<std::string>>& forms) { return os_ranks(make_arrangement(forms)); },
        py::arg("forms"));
    m.def(
        "h2_rank", [](const std::vector<std::vector<std::string>>& forms) { return h2_rank(make_arrangement(forms)).rank; },
        py::arg("forms"));

    m.def(
        "theta", [](Complex z, int n_max) { return theta_eval(z, ThetaSeriesParams{n_max, 1e-13}).value; },
        py::arg("z"), py::arg("n_max") = 8);

    m.def(
        "run_problem",
        [](const std::string& text) { return run(parse_problem(text), run_options_from_env()).to_json().dump(); },
        py::arg("text"), "Run a JSON problem description and return the JSON result record.");
}
