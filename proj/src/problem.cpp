#include "lgkit/problem.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "lgkit/arrangement.hpp"
#include "lgkit/critical.hpp"
#include "lgkit/errors.hpp"
#include "lgkit/factorization.hpp"
#include "lgkit/koszul.hpp"
#include "lgkit/parse.hpp"
#include "lgkit/theta.hpp"

namespace lgkit {

const char* version() { return "0.1.0"; }

namespace {

// ---------------------------------------------------------------------------
// Strict reading of problem files

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < offset; ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    json parse() const {
        try {
            return json::parse(text_);
        } catch (const json::parse_error& e) {
            // e.byte is one past the offending character.
            const auto [line, col] = line_column(text_, e.byte > 0 ? e.byte - 1 : 0);
            std::string what = e.what();
            if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
            throw ParseError("invalid JSON: " + what, line, col);
        }
    }

    [[noreturn]] void fail(const std::string& msg, const std::string& key) const {
        // nlohmann does not keep source positions, so the key's first
        // occurrence in the text stands in for its location.
        const std::string quoted = "\"" + key + "\"";
        const std::size_t at = key.empty() ? 0 : text_.find(quoted);
        const auto [line, col] = line_column(text_, at == std::string_view::npos ? 0 : at);
        throw ParseError(msg, line, col);
    }

    void require_object(const json& j, const std::string& key) const {
        if (!j.is_object()) fail((key.empty() ? std::string("problem") : "'" + key + "'") + " must be an object", key);
    }

    void allow_keys(const json& j, std::initializer_list<const char*> allowed) const {
        for (const auto& [k, v] : j.items()) {
            const bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; });
            if (!ok) fail("unknown key '" + k + "'", k);
        }
    }

    void need(const json& j, const char* key) const {
        if (!j.contains(key)) fail(std::string("missing required key '") + key + "'", "");
    }

    std::string str(const json& j, const char* key, std::string fallback = {}) const {
        if (!j.contains(key)) return fallback;
        if (!j.at(key).is_string()) fail(std::string("'") + key + "' must be a string", key);
        return j.at(key).get<std::string>();
    }

    template <class T>
    T uint(const json& j, const char* key, T fallback) const {
        if (!j.contains(key)) return fallback;
        if (!j.at(key).is_number_unsigned()) fail(std::string("'") + key + "' must be a non-negative integer", key);
        return j.at(key).get<T>();
    }

    int integer(const json& j, const char* key, int fallback) const {
        if (!j.contains(key)) return fallback;
        if (!j.at(key).is_number_integer()) fail(std::string("'") + key + "' must be an integer", key);
        return j.at(key).get<int>();
    }

    double number(const json& j, const char* key, double fallback) const {
        if (!j.contains(key)) return fallback;
        if (!j.at(key).is_number()) fail(std::string("'") + key + "' must be a number", key);
        return j.at(key).get<double>();
    }

    std::vector<std::string> strings(const json& j, const char* key) const {
        if (!j.contains(key)) return {};
        const json& a = j.at(key);
        if (!a.is_array()) fail(std::string("'") + key + "' must be a list of strings", key);
        std::vector<std::string> out;
        for (const auto& e : a) {
            if (!e.is_string()) fail(std::string("'") + key + "' must be a list of strings", key);
            out.push_back(e.get<std::string>());
        }
        return out;
    }

    // Matrix of strings; numbers are accepted and kept in their JSON spelling.
    std::vector<std::vector<std::string>> matrix(const json& j, const char* key) const {
        if (!j.contains(key)) return {};
        const json& a = j.at(key);
        if (!a.is_array()) fail(std::string("'") + key + "' must be a list of rows", key);
        std::vector<std::vector<std::string>> out;
        for (const auto& row : a) {
            if (!row.is_array()) fail(std::string("'") + key + "' must be a list of rows", key);
            std::vector<std::string> r;
            for (const auto& e : row) {
                if (e.is_string())
                    r.push_back(e.get<std::string>());
                else if (e.is_number_integer())
                    r.push_back(e.dump());
                else
                    fail(std::string("entries of '") + key + "' must be strings or integers", key);
            }
            out.push_back(std::move(r));
        }
        return out;
    }

    std::vector<unsigned> caps(const json& j, std::vector<unsigned> fallback) const {
        if (!j.contains("caps")) return fallback;
        const json& a = j.at("caps");
        if (!a.is_array() || a.empty()) fail("'caps' must be a non-empty list of non-negative integers", "caps");
        std::vector<unsigned> out;
        for (const auto& e : a) {
            if (!e.is_number_unsigned()) fail("'caps' must be a non-empty list of non-negative integers", "caps");
            out.push_back(e.get<unsigned>());
        }
        return out;
    }

    std::array<double, 2> interval(const json& j, const char* key, std::array<double, 2> fallback) const {
        if (!j.contains(key)) return fallback;
        const json& a = j.at(key);
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
            fail(std::string("'") + key + "' must be a pair of numbers [low, high]", key);
        std::array<double, 2> out{a[0].get<double>(), a[1].get<double>()};
        if (out[0] > out[1]) fail(std::string("'") + key + "' has low > high", key);
        return out;
    }

    FactorizationSpec factorization(const json& j, const std::string& key) const {
        require_object(j, key);
        allow_keys(j, {"r0", "r1", "A", "B", "W", "variables"});
        for (const char* k : {"r0", "r1", "A", "B", "W"}) need(j, k);
        FactorizationSpec f;
        f.r0 = uint<std::size_t>(j, "r0", 0);
        f.r1 = uint<std::size_t>(j, "r1", 0);
        f.A = matrix(j, "A");
        f.B = matrix(j, "B");
        f.W = str(j, "W");
        f.variables = strings(j, "variables");
        check_shape(f.A, f.r1, f.r0, "A");
        check_shape(f.B, f.r0, f.r1, "B");
        return f;
    }

    void check_shape(const std::vector<std::vector<std::string>>& m, std::size_t rows, std::size_t cols,
                     const char* key) const {
        const std::string want = std::to_string(rows) + "x" + std::to_string(cols);
        if (m.size() != rows)
            fail(std::string("shape error: '") + key + "' has " + std::to_string(m.size()) + " rows, expected " + want,
                 key);
        for (const auto& r : m)
            if (r.size() != cols)
                fail(std::string("shape error: a row of '") + key + "' has " + std::to_string(r.size()) +
                         " entries, expected " + want,
                     key);
    }

private:
    std::string_view text_;
};

ProblemSpec read_problem(const Reader& rd, const json& j) {
    rd.require_object(j, "");
    rd.need(j, "kind");
    const std::string kind = rd.str(j, "kind");
    ProblemSpec spec;
    spec.kind = kind;

    if (kind == "jacobi") {
        rd.allow_keys(j, {"kind", "W", "variables", "frame", "f", "equations", "tangent_generators", "order",
                          "degree_cap"});
        rd.need(j, "W");
        JacobiSpec s;
        s.W = rd.str(j, "W");
        s.variables = rd.strings(j, "variables");
        s.frame = rd.str(j, "frame", "affine");
        s.f = rd.str(j, "f");
        s.equations = rd.strings(j, "equations");
        s.tangent_generators = rd.matrix(j, "tangent_generators");
        s.order = rd.str(j, "order", "grevlex");
        s.degree_cap = rd.uint<unsigned>(j, "degree_cap", 64);
        if (s.frame != "affine" && s.frame != "hypersurface" && s.frame != "complete_intersection")
            rd.fail("'frame' must be affine, hypersurface or complete_intersection", "frame");
        if (s.frame == "hypersurface" && s.f.empty()) rd.fail("hypersurface frame needs 'f'", "frame");
        if (s.frame == "complete_intersection" && s.equations.empty())
            rd.fail("complete_intersection frame needs 'equations'", "frame");
        if (s.order != "lex" && s.order != "grlex" && s.order != "grevlex")
            rd.fail("'order' must be lex, grlex or grevlex", "order");
        spec.payload = s;
    } else if (kind == "koszul") {
        rd.allow_keys(j, {"kind", "W", "variables", "caps"});
        rd.need(j, "W");
        KoszulSpec s;
        s.W = rd.str(j, "W");
        s.variables = rd.strings(j, "variables");
        s.caps = rd.caps(j, s.caps);
        spec.payload = s;
    } else if (kind == "critical") {
        rd.allow_keys(j, {"kind", "f", "W", "variables", "re", "im", "grid", "tol", "max_iter"});
        rd.need(j, "f");
        rd.need(j, "W");
        CriticalSpec s;
        s.f = rd.str(j, "f");
        s.W = rd.str(j, "W");
        s.variables = rd.strings(j, "variables");
        s.re = rd.interval(j, "re", s.re);
        s.im = rd.interval(j, "im", s.im);
        s.grid = rd.uint<unsigned>(j, "grid", s.grid);
        s.tol = rd.number(j, "tol", s.tol);
        s.max_iter = rd.uint<unsigned>(j, "max_iter", s.max_iter);
        if (s.grid < 1) rd.fail("'grid' must be at least 1", "grid");
        if (!(s.tol > 0.0)) rd.fail("'tol' must be positive", "tol");
        spec.payload = s;
    } else if (kind == "mf-verify" || kind == "mf-disk") {
        rd.allow_keys(j, {"kind", "factorization", "caps"});
        rd.need(j, "factorization");
        MfSpec s;
        s.mode = kind.substr(3);
        s.source = rd.factorization(j.at("factorization"), "factorization");
        s.caps = rd.caps(j, s.caps);
        spec.payload = s;
    } else if (kind == "mf-hom") {
        rd.allow_keys(j, {"kind", "source", "target", "caps"});
        rd.need(j, "source");
        MfSpec s;
        s.mode = "hom";
        s.source = rd.factorization(j.at("source"), "source");
        if (j.contains("target")) s.target = rd.factorization(j.at("target"), "target");
        s.caps = rd.caps(j, s.caps);
        spec.payload = s;
    } else if (kind == "arrangement") {
        rd.allow_keys(j, {"kind", "forms", "report"});
        rd.need(j, "forms");
        ArrangementSpec s;
        s.forms = rd.matrix(j, "forms");
        s.report = rd.str(j, "report", "all");
        if (s.forms.empty()) rd.fail("'forms' must list at least one form", "forms");
        for (const auto& row : s.forms)
            for (const auto& c : row) {
                mpq_class q;
                std::string t = c;
                if (!t.empty() && t.front() == '+') t.erase(0, 1);
                if (t.empty() || t.find_first_not_of("-0123456789/") != std::string::npos || q.set_str(t, 10) != 0 ||
                    sgn(q.get_den()) == 0)
                    rd.fail("invalid rational coefficient '" + c + "' in 'forms'", "forms");
            }
        static const std::set<std::string> reports{"poincare", "mobius", "os", "h2", "all"};
        if (!reports.count(s.report)) rd.fail("'report' must be poincare, mobius, os, h2 or all", "report");
        spec.payload = s;
    } else if (kind == "theta") {
        rd.allow_keys(j, {"kind", "samples", "tol", "seed", "n_max"});
        ThetaSpec s;
        s.samples = rd.uint<std::size_t>(j, "samples", s.samples);
        s.tol = rd.number(j, "tol", s.tol);
        s.seed = rd.uint<std::uint64_t>(j, "seed", s.seed);
        s.n_max = rd.integer(j, "n_max", s.n_max);
        if (s.n_max < 1) rd.fail("'n_max' must be at least 1", "n_max");
        spec.payload = s;
    } else {
        rd.fail("unknown problem kind '" + kind + "'", kind);
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Building module inputs

std::vector<std::string> names_for(const std::vector<std::string>& explicit_names, std::vector<std::string> texts) {
    if (!explicit_names.empty()) return explicit_names;
    return infer_variables(texts);
}

std::vector<std::string> factorization_texts(const FactorizationSpec& f) {
    std::vector<std::string> texts{f.W};
    for (const auto* m : {&f.A, &f.B})
        for (const auto& row : *m) texts.insert(texts.end(), row.begin(), row.end());
    return texts;
}

MatrixFactorization build_factorization(const FactorizationSpec& f, const VariableNames& names) {
    auto conv = [&](const std::vector<std::vector<std::string>>& m) {
        PolyMatrix out;
        for (const auto& row : m) {
            std::vector<Poly> r;
            for (const auto& e : row) r.push_back(parse_poly(e, names));
            out.push_back(std::move(r));
        }
        return out;
    };
    return {f.r0, f.r1, conv(f.A), conv(f.B), parse_poly(f.W, names)};
}

json poly_matrix_json(const PolyMatrix& m, const VariableNames& names) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& p : row) r.push_back(p.to_string(names));
        out.push_back(r);
    }
    return out;
}

json dims_per_cap_json(const CohomologyReport& r) {
    json out = json::object();
    for (const auto& [cap, dims] : r.dims_per_cap) out[std::to_string(cap)] = dims;
    return out;
}

RationalRow rational_row(const std::vector<std::string>& row) {
    RationalRow out;
    for (std::string t : row) {
        if (!t.empty() && t.front() == '+') t.erase(0, 1);
        mpq_class q(t, 10);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch

void run_jacobi(const JacobiSpec& s, const RunOptions& opt, ResultRecord& rec) {
    std::vector<std::string> texts{s.W, s.f};
    texts.insert(texts.end(), s.equations.begin(), s.equations.end());
    for (const auto& v : s.tangent_generators) texts.insert(texts.end(), v.begin(), v.end());
    const VariableNames names = names_for(s.variables, texts);
    const std::size_t n = names.size();
    const Poly W = parse_poly(s.W, names);

    FrameSpec frame = AffineFrame{};
    if (s.frame == "hypersurface") {
        frame = HypersurfaceFrame{parse_poly(s.f, names)};
    } else if (s.frame == "complete_intersection") {
        CompleteIntersectionFrame ci;
        for (const auto& e : s.equations) ci.equations.push_back(parse_poly(e, names));
        for (const auto& v : s.tangent_generators) {
            std::vector<Poly> field;
            for (const auto& c : v) field.push_back(parse_poly(c, names));
            ci.tangent_generators.push_back(std::move(field));
        }
        frame = std::move(ci);
    }
    const MonomialOrder order = s.order == "lex"     ? MonomialOrder::lex(n)
                                : s.order == "grlex" ? MonomialOrder::grlex(n)
                                                     : MonomialOrder::grevlex(n);
    const Ideal J = jacobi_ideal(W, frame);
    const GroebnerBasis gb = buchberger(J, order, opt.groebner);
    const QuotientBasis qb = quotient_basis(gb, s.degree_cap);

    json ideal = json::array(), basis = json::array(), standard = json::array();
    for (const auto& g : J.generators()) ideal.push_back(g.to_string(names));
    for (const auto& g : gb.basis()) basis.push_back(g.to_string(names));
    for (const auto& m : qb.standard_monomials) standard.push_back(m.to_string(names));
    rec.outputs = {{"infinite", qb.infinite},
                   {"dimension", qb.infinite ? json(nullptr) : json(qb.dimension())},
                   {"basis", standard},
                   {"groebner_basis", basis},
                   {"ideal", ideal}};
    rec.diagnostics = {{"variables", names}, {"order", order.name()}, {"degree_cap", s.degree_cap}};
}

void run_koszul(const KoszulSpec& s, const RunOptions& opt, ResultRecord& rec) {
    const VariableNames names = names_for(s.variables, {s.W});
    const Poly W = parse_poly(s.W, names);
    const CohomologyReport r = koszul_cohomology_dims(W, s.caps, opt.truncation);
    rec.outputs = {{"positions", r.positions}, {"dims", r.dims()}, {"stabilized", r.stabilized}};
    rec.diagnostics = {{"variables", names}, {"cap_used", r.cap_used}, {"dims_per_cap", dims_per_cap_json(r)}};
    rec.conclusive = r.stabilized;
}

void run_critical(const CriticalSpec& s, const RunOptions& opt, ResultRecord& rec) {
    const VariableNames names = names_for(s.variables, {s.f, s.W});
    const ExpPoly f = parse_expression(s.f, names);
    const ExpPoly W = parse_expression(s.W, names);
    const CriticalSystem cs = critical_system(f, W);
    MultistartOptions mo;
    mo.grid = s.grid;
    mo.threads = opt.threads;
    mo.newton.tol = s.tol;
    mo.newton.max_iter = s.max_iter;
    const auto box = ComplexBox::uniform(names.size(), {s.re[0], s.re[1]}, {s.im[0], s.im[1]});
    const auto points = find_critical_points(cs.system, box, mo);

    json pts = json::array();
    for (const auto& p : points) {
        json coords = json::array();
        for (const auto& c : p.coords) coords.push_back({c.real(), c.imag()});
        pts.push_back({{"coords", coords},
                       {"residual", p.residual},
                       {"multiplicity_hint", p.multiplicity_hint},
                       {"iterations", p.iterations}});
    }
    json eqs = json::array();
    for (const auto& e : cs.system.equations) eqs.push_back(e.to_string(names));
    rec.outputs = {{"points", pts}, {"count", points.size()}};
    rec.diagnostics = {{"variables", names}, {"equations", eqs}, {"degenerate", cs.degenerate}};
}

void run_mf(const MfSpec& s, const RunOptions& opt, ResultRecord& rec) {
    std::vector<std::string> texts = factorization_texts(s.source);
    if (s.target) {
        const auto more = factorization_texts(*s.target);
        texts.insert(texts.end(), more.begin(), more.end());
    }
    const VariableNames names = names_for(s.source.variables, texts);
    if (s.target && !s.target->variables.empty() && s.target->variables != names)
        throw DimensionError("source and target factorizations use different variables");
    const MatrixFactorization a = build_factorization(s.source, names);
    rec.diagnostics = {{"variables", names}};

    if (s.mode == "verify") {
        const FactorizationCheck c = verify_factorization(a);
        rec.outputs = {{"ok", c.ok},
                       {"ba_residual", poly_matrix_json(c.ba_residual, names)},
                       {"ab_residual", poly_matrix_json(c.ab_residual, names)}};
    } else if (s.mode == "hom") {
        const MatrixFactorization b = s.target ? build_factorization(*s.target, names) : a;
        const HomDims h = hmf_hom_dims(a, b, s.caps, opt.truncation);
        rec.outputs = {{"even", h.even}, {"odd", h.odd}, {"stabilized", h.stabilized}};
        rec.diagnostics["cap_used"] = h.cap_used;
        rec.diagnostics["dims_per_cap"] = dims_per_cap_json(h.report);
        rec.conclusive = h.stabilized;
    } else {
        const DiskReport d = disk_algebra_dims(a, s.caps, opt.truncation);
        rec.outputs = {{"jacobi_dim", d.jacobi_dim},   {"end_even", d.end_dims.even}, {"end_odd", d.end_dims.odd},
                       {"predicted", d.predicted},     {"direct_even", d.direct_even}, {"direct_odd", d.direct_odd},
                       {"direct", d.direct},           {"verdict", d.verdict}};
        rec.diagnostics["cap_used"] = d.direct_report.cap_used;
        rec.diagnostics["stabilized"] = d.stabilized;
        rec.diagnostics["direct_dims_per_cap"] = dims_per_cap_json(d.direct_report);
        rec.diagnostics["end_dims_per_cap"] = dims_per_cap_json(d.end_dims.report);
    }
}

void run_arrangement(const ArrangementSpec& s, ResultRecord& rec) {
    std::vector<RationalRow> forms;
    for (const auto& row : s.forms) forms.push_back(rational_row(row));
    const std::size_t d = forms.front().size();
    const Arrangement arr(d, std::move(forms));
    const bool all = s.report == "all";
    rec.outputs = json::object();
    rec.diagnostics = {{"dimension", arr.dimension()}, {"hyperplanes", arr.size()}};
    std::vector<std::int64_t> poincare;
    if (all || s.report == "poincare" || s.report == "mobius" || s.report == "h2") {
        const IntersectionLattice L = intersection_lattice(arr);
        poincare = poincare_polynomial(L);
        rec.diagnostics["flats"] = L.flats.size();
        rec.diagnostics["rank"] = L.rank();
        if (all || s.report == "poincare") rec.outputs["poincare"] = poincare;
        if (all || s.report == "mobius") {
            const auto mu = mobius_table(L);
            json flats = json::array();
            for (std::size_t k = 0; k < L.flats.size(); ++k)
                flats.push_back({{"hyperplanes", L.flats[k].hyperplanes},
                                 {"codim", L.flats[k].codim},
                                 {"mu", mu[k]},
                                 {"covers", L.covers[k]}});
            rec.outputs["mobius"] = flats;
        }
        if (all || s.report == "h2") {
            const std::int64_t h2 = poincare.size() > 2 ? poincare[2] : 0;
            rec.outputs["h2_rank"] = h2;
            rec.outputs["supports_nontrivial_elementary"] = h2 > 0;
        }
    }
    if (all || s.report == "os") {
        const auto os = os_ranks(arr);
        rec.outputs["os_ranks"] = os;
        if (all) rec.diagnostics["os_matches_poincare"] = os == poincare;
    }
}

void run_theta(const ThetaSpec& s, ResultRecord& rec) {
    ThetaSeriesParams params;
    params.n_max = s.n_max;
    const ThetaCheckReport r = theta_check(s.samples, s.tol, s.seed, params);
    rec.outputs = {{"ok", r.ok},
                   {"theta_period_real", r.theta_period_real},
                   {"theta_period_imag", r.theta_period_imag},
                   {"theta_even", r.theta_even},
                   {"theta_zero", r.theta_zero},
                   {"w_period_z1", r.w_period_z1},
                   {"w_period_z2", r.w_period_z2},
                   {"chart_identity", r.factorization.chart_identity},
                   {"d_squared", r.factorization.d_squared}};
    rec.diagnostics = {{"samples", r.samples}, {"tol", r.tol}, {"n_max", s.n_max},
                       {"tail_bound_at_im_2", theta_tail_bound(s.n_max, 2.0)}};
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
    const Reader rd(text);
    return read_problem(rd, rd.parse());
}

FactorizationSpec parse_factorization(std::string_view text) {
    const Reader rd(text);
    return rd.factorization(rd.parse(), "");
}

json to_json(const FactorizationSpec& f) {
    json j = {{"r0", f.r0}, {"r1", f.r1}, {"A", f.A}, {"B", f.B}, {"W", f.W}};
    if (!f.variables.empty()) j["variables"] = f.variables;
    return j;
}

json to_json(const ProblemSpec& spec) {
    json j = {{"kind", spec.kind}};
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, JacobiSpec>) {
                j["W"] = s.W;
                j["frame"] = s.frame;
                j["order"] = s.order;
                j["degree_cap"] = s.degree_cap;
                if (!s.variables.empty()) j["variables"] = s.variables;
                if (!s.f.empty()) j["f"] = s.f;
                if (!s.equations.empty()) j["equations"] = s.equations;
                if (!s.tangent_generators.empty()) j["tangent_generators"] = s.tangent_generators;
            } else if constexpr (std::is_same_v<T, KoszulSpec>) {
                j["W"] = s.W;
                j["caps"] = s.caps;
                if (!s.variables.empty()) j["variables"] = s.variables;
            } else if constexpr (std::is_same_v<T, CriticalSpec>) {
                j["f"] = s.f;
                j["W"] = s.W;
                j["re"] = s.re;
                j["im"] = s.im;
                j["grid"] = s.grid;
                j["tol"] = s.tol;
                j["max_iter"] = s.max_iter;
                if (!s.variables.empty()) j["variables"] = s.variables;
            } else if constexpr (std::is_same_v<T, MfSpec>) {
                if (s.mode == "hom") {
                    j["source"] = to_json(s.source);
                    if (s.target) j["target"] = to_json(*s.target);
                } else {
                    j["factorization"] = to_json(s.source);
                }
                if (s.mode != "verify") j["caps"] = s.caps;
            } else if constexpr (std::is_same_v<T, ArrangementSpec>) {
                j["forms"] = s.forms;
                j["report"] = s.report;
            } else {
                j["samples"] = s.samples;
                j["tol"] = s.tol;
                j["seed"] = s.seed;
                j["n_max"] = s.n_max;
            }
        },
        spec.payload);
    return j;
}

std::string serialize_problem(const ProblemSpec& spec) { return to_json(spec).dump(2); }

RunOptions run_options_from_env() {
    RunOptions opt;
    opt.truncation = truncation_options_from_env();
    if (const char* v = std::getenv("LGKIT_MAX_PAIRS")) opt.groebner.max_pairs = std::stoul(v);
    return opt;
}

json ResultRecord::to_json() const {
    return {{"kind", kind},       {"inputs", inputs},     {"outputs", outputs},
            {"diagnostics", diagnostics}, {"version", version}, {"conclusive", conclusive}};
}

ResultRecord ResultRecord::from_json(const json& j) {
    ResultRecord r;
    r.kind = j.at("kind").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    r.diagnostics = j.at("diagnostics");
    r.version = j.at("version").get<std::string>();
    r.conclusive = j.value("conclusive", true);
    return r;
}

ResultRecord run(const ProblemSpec& problem, const RunOptions& options) {
    ResultRecord rec;
    rec.kind = problem.kind;
    rec.inputs = to_json(problem);
    rec.version = version();
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, JacobiSpec>)
                run_jacobi(s, options, rec);
            else if constexpr (std::is_same_v<T, KoszulSpec>)
                run_koszul(s, options, rec);
            else if constexpr (std::is_same_v<T, CriticalSpec>)
                run_critical(s, options, rec);
            else if constexpr (std::is_same_v<T, MfSpec>)
                run_mf(s, options, rec);
            else if constexpr (std::is_same_v<T, ArrangementSpec>)
                run_arrangement(s, rec);
            else
                run_theta(s, rec);
        },
        problem.payload);
    return rec;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return exit_parse;
    if (dynamic_cast<const InconclusiveError*>(&e)) return exit_inconclusive;
    if (dynamic_cast<const ResourceLimitError*>(&e)) return exit_resource;
    return exit_error;
}

}  // namespace lgkit
