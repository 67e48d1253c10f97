#include "lgkit/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "lgkit/errors.hpp"

namespace lgkit {

VariableNames default_variables(std::size_t nvars) {
    VariableNames names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

namespace {

void compositions(std::size_t nvars, unsigned degree, std::vector<std::uint32_t>& cur, std::size_t pos,
                  std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.emplace_back(cur);
        return;
    }
    for (unsigned a = degree + 1; a-- > 0;) {
        cur[pos] = a;
        compositions(nvars, degree - a, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned max_degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        out.emplace_back();
        return out;
    }
    const auto order = MonomialOrder::grevlex(nvars);
    std::vector<std::uint32_t> cur(nvars, 0);
    for (unsigned d = 0; d <= max_degree; ++d) {
        const std::size_t start = out.size();
        compositions(nvars, d, cur, 0, out);
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end(),
                  [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    }
    return out;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, std::uint32_t power) {
    if (var >= nvars) throw DimensionError("variable index out of range");
    std::vector<std::uint32_t> e(nvars, 0);
    e[var] = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (var) return std::nullopt;
        var = i;
    }
    return var;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] && other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
    return Monomial(std::move(e));
}

std::string Monomial::to_string(const VariableNames& names) const {
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (!exps_[i]) continue;
        if (!out.empty()) out += "*";
        out += names.at(i);
        if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out;
}

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> permutation)
    : kind_(kind), perm_(std::move(permutation)) {
    std::vector<std::size_t> sorted(perm_);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw DomainError("monomial order permutation is not a permutation");
}

namespace {
std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}
}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return {Kind::lex, identity_perm(nvars)}; }
MonomialOrder MonomialOrder::grlex(std::size_t nvars) { return {Kind::graded_lex, identity_perm(nvars)}; }
MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return {Kind::graded_reverse_lex, identity_perm(nvars)}; }

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::lex: return "lex";
        case Kind::graded_lex: return "grlex";
        case Kind::graded_reverse_lex: return "grevlex";
    }
    return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != Kind::lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
    if (kind_ == Kind::graded_reverse_lex) {
        for (std::size_t k = perm_.size(); k-- > 0;) {
            const std::size_t v = perm_[k];
            if (a[v] != b[v]) return b[v] <=> a[v];
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t v : perm_)
        if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t nvars, const GaussianRational& c) {
    Poly p(nvars);
    p.add_term(c, Monomial(nvars));
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t var) {
    Poly p(nvars);
    p.add_term(1, Monomial::variable(nvars, var));
    return p;
}

Poly Poly::term(const GaussianRational& c, const Monomial& m) {
    Poly p(m.nvars());
    p.add_term(c, m);
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
}

GaussianRational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational{} : it->second;
}

const Monomial& Poly::leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return best->first;
}

const GaussianRational& Poly::leading_coefficient(const MonomialOrder& order) const {
    return terms_.at(leading_monomial(order));
}

void Poly::add_term(const GaussianRational& c, const Monomial& m) {
    if (m.nvars() != nvars_) throw DimensionError("monomial has wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.nvars_ != nvars_) throw DimensionError("adding polynomials in different rings");
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.nvars_ != nvars_) throw DimensionError("subtracting polynomials in different rings");
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("multiplying polynomials in different rings");
    Poly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
    return out;
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::mul_term(const GaussianRational& c, const Monomial& m) const {
    Poly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly result = constant(nvars_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars_) throw DimensionError("derivative variable out of range");
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
        const auto e = m[var];
        if (!e) continue;
        std::vector<std::uint32_t> ex(m.exponents().begin(), m.exponents().end());
        --ex[var];
        out.add_term(c * GaussianRational(static_cast<long>(e)), Monomial(std::move(ex)));
    }
    return out;
}

Poly Poly::substitute(std::span<const Poly> values) const {
    if (values.size() != nvars_) throw DimensionError("substitution needs one polynomial per variable");
    const std::size_t target = values.empty() ? 0 : values[0].nvars();
    Poly out(target);
    for (const auto& [m, c] : terms_) {
        Poly t = constant(target, c);
        for (std::size_t v = 0; v < nvars_; ++v)
            if (m[v]) t = t * values[v].pow(m[v]);
        out += t;
    }
    return out;
}

std::string Poly::to_string(const VariableNames& names) const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    const auto order = MonomialOrder::grevlex(nvars_);
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto* a, const auto* b) { return order.less(b->first, a->first); });

    std::string out;
    for (const auto* t : sorted) {
        const Monomial& m = t->first;
        GaussianRational c = t->second;
        bool negative = false;
        if (c.is_real() && sgn(c.re()) < 0) {
            negative = true;
            c = -c;
        } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
            negative = true;
            c = -c;
        }
        std::string body;
        if (m.is_one()) {
            body = c.to_string();
        } else if (c.is_one()) {
            body = m.to_string(names);
        } else {
            body = c.to_string() + "*" + m.to_string(names);
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

// ---------------------------------------------------------------- Ideal / GroebnerBasis

Ideal::Ideal(std::size_t nvars, std::vector<Poly> generators) : nvars_(nvars) {
    for (auto& g : generators) {
        if (g.nvars() != nvars) throw DimensionError("ideal generator has wrong number of variables");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

GroebnerBasis::GroebnerBasis(std::vector<Poly> basis, MonomialOrder order, Ideal source)
    : basis_(std::move(basis)), order_(std::move(order)), source_(std::move(source)) {
    for (const auto& g : basis_) leads_.push_back(g.leading_monomial(order_));
}

bool GroebnerBasis::is_unit() const {
    return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.is_one(); });
}

namespace {

struct OrderLess {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};
using OrderedTerms = std::map<Monomial, GaussianRational, OrderLess>;

// Divisors are assumed monic with the given leading monomials.
Poly reduce_full(const Poly& p, const std::vector<const Poly*>& divisors, const std::vector<Monomial>& leads,
                 const MonomialOrder& order) {
    OrderedTerms work(OrderLess{&order});
    for (const auto& [m, c] : p.terms()) work.emplace(m, c);
    Poly rem(p.nvars());
    while (!work.empty()) {
        auto it = std::prev(work.end());
        const Monomial m = it->first;
        const GaussianRational c = it->second;
        work.erase(it);
        std::size_t k = 0;
        while (k < leads.size() && !leads[k].divides(m)) ++k;
        if (k == leads.size()) {
            rem.add_term(c, m);
            continue;
        }
        const Monomial q = m / leads[k];
        for (const auto& [mg, cg] : divisors[k]->terms()) {
            if (mg == leads[k]) continue;
            GaussianRational delta = -(c * cg);
            auto [jt, inserted] = work.try_emplace(mg * q, delta);
            if (!inserted) {
                jt->second += delta;
                if (jt->second.is_zero()) work.erase(jt);
            }
        }
    }
    return rem;
}

Poly make_monic(Poly p, const MonomialOrder& order) {
    const GaussianRational lc = p.leading_coefficient(order);
    if (!lc.is_one()) p *= lc.inverse();
    return p;
}

struct CriticalPair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
    if (order.permutation().size() != ideal.nvars())
        throw DimensionError("monomial order and ideal have different variable counts");

    std::vector<Poly> G;
    std::vector<Monomial> L;
    std::vector<unsigned> sugar;

    auto pair_less = [&order](const CriticalPair& a, const CriticalPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::set<CriticalPair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add_poly = [&](Poly g, unsigned s) {
        g = make_monic(std::move(g), order);
        const std::size_t idx = G.size();
        L.push_back(g.leading_monomial(order));
        G.push_back(std::move(g));
        sugar.push_back(s);
        for (std::size_t k = 0; k < idx; ++k) {
            Monomial l = L[k].lcm(L[idx]);
            const unsigned sk = sugar[k] + l.degree() - L[k].degree();
            const unsigned si = sugar[idx] + l.degree() - L[idx].degree();
            queue.insert(CriticalPair{k, idx, std::move(l), std::max(sk, si)});
            pending.emplace(k, idx);
        }
        if (pending.size() > options.max_pairs)
            throw ResourceLimitError("Groebner pair queue exceeded " + std::to_string(options.max_pairs) + " pairs");
    };

    bool unit = false;
    for (const auto& g : ideal.generators()) {
        if (g.is_constant()) unit = true;
        add_poly(g, static_cast<unsigned>(g.degree()));
    }

    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

    while (!queue.empty() && !unit) {
        CriticalPair cp = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({cp.i, cp.j});

        if (L[cp.i].coprime(L[cp.j])) continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == cp.i || k == cp.j) continue;
            chain = L[k].divides(cp.lcm) && !is_pending(cp.i, k) && !is_pending(cp.j, k);
        }
        if (chain) continue;

        Poly s = G[cp.i].mul_term(1, cp.lcm / L[cp.i]) - G[cp.j].mul_term(1, cp.lcm / L[cp.j]);
        std::vector<const Poly*> divisors;
        for (const auto& g : G) divisors.push_back(&g);
        Poly r = reduce_full(s, divisors, L, order);
        if (r.is_zero()) continue;
        if (r.is_constant()) unit = true;
        add_poly(std::move(r), cp.sugar);
    }

    if (unit) {
        return GroebnerBasis({Poly::constant(ideal.nvars(), 1)}, order, ideal);
    }

    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
            if (k == i || !L[k].divides(L[i])) continue;
            redundant = !(L[k] == L[i]) || k < i;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Poly> reduced;
    for (std::size_t i : keep) {
        std::vector<const Poly*> others;
        std::vector<Monomial> other_leads;
        for (std::size_t k : keep) {
            if (k == i) continue;
            others.push_back(&G[k]);
            other_leads.push_back(L[k]);
        }
        reduced.push_back(make_monic(reduce_full(G[i], others, other_leads, order), order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    return GroebnerBasis(std::move(reduced), order, ideal);
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    if (p.nvars() != gb.nvars()) throw DimensionError("polynomial and Groebner basis have different variable counts");
    std::vector<const Poly*> divisors;
    for (const auto& g : gb.basis()) divisors.push_back(&g);
    return reduce_full(p, divisors, gb.leading_monomials(), gb.order());
}

QuotientBasis quotient_basis(const GroebnerBasis& gb, unsigned degree_cap) {
    QuotientBasis out;
    if (gb.is_unit()) return out;
    const std::size_t n = gb.nvars();
    std::vector<bool> has_pure_power(n, false);
    for (const auto& m : gb.leading_monomials())
        if (auto v = m.pure_power_variable()) has_pure_power[*v] = true;
    if (std::find(has_pure_power.begin(), has_pure_power.end(), false) != has_pure_power.end()) {
        out.infinite = true;
        return out;
    }

    std::vector<std::uint32_t> cur(n, 0);
    for (unsigned d = 0;; ++d) {
        if (d > degree_cap)
            throw InconclusiveError("quotient staircase still open at degree cap " + std::to_string(degree_cap));
        std::vector<Monomial> level;
        if (n == 0) {
            if (d == 0) level.emplace_back();
        } else {
            compositions(n, d, cur, 0, level);
        }
        bool any = false;
        for (auto& m : level) {
            const bool standard = std::none_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                                               [&](const Monomial& l) { return l.divides(m); });
            if (standard) {
                out.standard_monomials.push_back(std::move(m));
                any = true;
            }
        }
        if (!any) break;
    }
    std::sort(out.standard_monomials.begin(), out.standard_monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order().less(a, b); });
    return out;
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
    for (const auto& g : a.basis())
        if (!normal_form(g, b).is_zero()) return false;
    for (const auto& g : b.basis())
        if (!normal_form(g, a).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------- critical ideals

namespace {

struct JacobiBuilder {
    const Poly& W;

    Ideal operator()(const AffineFrame&) const {
        std::vector<Poly> gens;
        for (std::size_t i = 0; i < W.nvars(); ++i) gens.push_back(W.derivative(i));
        return Ideal(W.nvars(), std::move(gens));
    }

    Ideal operator()(const HypersurfaceFrame& h) const {
        const std::size_t n = W.nvars();
        if (h.f.nvars() != n) throw DimensionError("hypersurface equation and W live in different rings");
        if (n < 2) throw DimensionError("hypersurface frame needs at least two ambient variables");
        std::vector<Poly> gens{h.f};
        std::vector<Poly> dW, df;
        for (std::size_t i = 0; i < n; ++i) {
            dW.push_back(W.derivative(i));
            df.push_back(h.f.derivative(i));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) gens.push_back(dW[i] * df[j] - dW[j] * df[i]);
        return Ideal(n, std::move(gens));
    }

    Ideal operator()(const CompleteIntersectionFrame& ci) const {
        const std::size_t n = W.nvars();
        std::vector<Poly> gens;
        for (const auto& f : ci.equations) {
            if (f.nvars() != n) throw DimensionError("complete-intersection equation has wrong variable count");
            gens.push_back(f);
        }
        std::vector<Poly> dW;
        for (std::size_t i = 0; i < n; ++i) dW.push_back(W.derivative(i));
        for (const auto& v : ci.tangent_generators) {
            if (v.size() != n) throw DimensionError("tangent generator must have one component per ambient variable");
            Poly g(n);
            for (std::size_t j = 0; j < n; ++j) g += v[j] * dW[j];
            gens.push_back(std::move(g));
        }
        return Ideal(n, std::move(gens));
    }
};

}  // namespace

Ideal jacobi_ideal(const Poly& W, const FrameSpec& frame) { return std::visit(JacobiBuilder{W}, frame); }

QuotientBasis jacobi_quotient(const Poly& W, const FrameSpec& frame, unsigned degree_cap) {
    const Ideal J = jacobi_ideal(W, frame);
    return quotient_basis(buchberger(J, MonomialOrder::grevlex(J.nvars())), degree_cap);
}

}  // namespace lgkit
