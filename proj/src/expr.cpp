#include "lgkit/expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lgkit/errors.hpp"

namespace lgkit {

struct ExpPoly::Node {
    Kind kind = Kind::constant;
    Complex value{};
    std::optional<GaussianRational> exact;
    std::size_t index = 0;
    unsigned exponent = 0;
    std::vector<ExpPoly> children;
};

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_constant(const Complex& v, const std::optional<GaussianRational>& exact) {
    if (exact) return exact->to_string();
    if (v.imag() == 0.0) return format_double(v.real());
    if (v.real() == 0.0) return format_double(v.imag()) + "*i";
    return "(" + format_double(v.real()) + (v.imag() < 0 ? "" : "+") + format_double(v.imag()) + "*i)";
}

}  // namespace

ExpPoly ExpPoly::constant(std::size_t nvars, Complex value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = value;
    return {nvars, std::move(n)};
}

ExpPoly ExpPoly::constant(std::size_t nvars, const GaussianRational& value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = value.to_complex();
    n->exact = value;
    return {nvars, std::move(n)};
}

ExpPoly ExpPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DimensionError("variable index out of range");
    auto n = std::make_shared<Node>();
    n->kind = Kind::variable;
    n->index = index;
    return {nvars, std::move(n)};
}

ExpPoly ExpPoly::sum(std::size_t nvars, std::vector<ExpPoly> terms) {
    std::vector<ExpPoly> flat;
    Complex cval{};
    std::optional<GaussianRational> cexact = GaussianRational{};
    bool have_const = false;
    for (auto& t : terms) {
        if (t.nvars_ != nvars) throw DimensionError("expression operands live in different variable sets");
        if (t.kind() == Kind::sum) {
            for (const auto& c : t.children()) {
                if (c.is_constant()) {
                    have_const = true;
                    cval += c.constant_value();
                    auto e = c.exact_value();
                    if (cexact && e) *cexact += *e; else cexact.reset();
                } else {
                    flat.push_back(c);
                }
            }
        } else if (t.is_constant()) {
            have_const = true;
            cval += t.constant_value();
            auto e = t.exact_value();
            if (cexact && e) *cexact += *e; else cexact.reset();
        } else {
            flat.push_back(std::move(t));
        }
    }
    const bool const_zero = cexact ? cexact->is_zero() : cval == Complex{};
    if (have_const && !const_zero) {
        flat.push_back(cexact ? constant(nvars, *cexact) : constant(nvars, cval));
    }
    if (flat.empty()) return cexact ? constant(nvars, *cexact) : constant(nvars, cval);
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::sum;
    n->children = std::move(flat);
    return {nvars, std::move(n)};
}

ExpPoly ExpPoly::product(std::size_t nvars, std::vector<ExpPoly> factors) {
    std::vector<ExpPoly> flat;
    Complex cval{1.0, 0.0};
    std::optional<GaussianRational> cexact = GaussianRational{1};
    auto absorb = [&](const ExpPoly& c) {
        cval *= c.constant_value();
        auto e = c.exact_value();
        if (cexact && e) *cexact *= *e; else cexact.reset();
    };
    for (auto& f : factors) {
        if (f.nvars_ != nvars) throw DimensionError("expression operands live in different variable sets");
        if (f.kind() == Kind::product) {
            for (const auto& c : f.children()) {
                if (c.is_constant()) absorb(c); else flat.push_back(c);
            }
        } else if (f.is_constant()) {
            absorb(f);
        } else {
            flat.push_back(std::move(f));
        }
    }
    const bool zero = cexact ? cexact->is_zero() : cval == Complex{};
    if (zero) return constant(nvars, GaussianRational{});
    const bool one = cexact ? cexact->is_one() : cval == Complex{1.0, 0.0};
    if (!one || flat.empty()) {
        flat.insert(flat.begin(), cexact ? constant(nvars, *cexact) : constant(nvars, cval));
    }
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::product;
    n->children = std::move(flat);
    return {nvars, std::move(n)};
}

ExpPoly ExpPoly::power(const ExpPoly& base, unsigned exponent) {
    if (exponent == 0) return constant(base.nvars_, GaussianRational{1});
    if (exponent == 1) return base;
    if (base.is_constant()) {
        if (auto e = base.exact_value()) {
            GaussianRational r{1};
            for (unsigned k = 0; k < exponent; ++k) r *= *e;
            return constant(base.nvars_, r);
        }
        return constant(base.nvars_, std::pow(base.constant_value(), static_cast<double>(exponent)));
    }
    if (base.kind() == Kind::power) return power(base.children()[0], base.exponent() * exponent);
    auto n = std::make_shared<Node>();
    n->kind = Kind::power;
    n->exponent = exponent;
    n->children = {base};
    return {base.nvars_, std::move(n)};
}

ExpPoly ExpPoly::exp(const ExpPoly& argument) {
    if (argument.is_constant()) {
        if (argument.is_zero()) return constant(argument.nvars_, GaussianRational{1});
        return constant(argument.nvars_, std::exp(argument.constant_value()));
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::exp;
    n->children = {argument};
    return {argument.nvars_, std::move(n)};
}

ExpPoly ExpPoly::from_poly(const Poly& p) {
    const std::size_t nv = p.nvars();
    std::vector<ExpPoly> terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<ExpPoly> factors{constant(nv, c)};
        for (std::size_t v = 0; v < nv; ++v)
            if (m[v]) factors.push_back(power(variable(nv, v), m[v]));
        terms.push_back(product(nv, std::move(factors)));
    }
    return sum(nv, std::move(terms));
}

ExpPoly::Kind ExpPoly::kind() const { return node_ ? node_->kind : Kind::constant; }

bool ExpPoly::is_zero() const {
    if (!is_constant()) return false;
    if (auto e = exact_value()) return e->is_zero();
    return constant_value() == Complex{};
}

bool ExpPoly::is_one() const {
    if (!is_constant()) return false;
    if (auto e = exact_value()) return e->is_one();
    return constant_value() == Complex{1.0, 0.0};
}

Complex ExpPoly::constant_value() const { return node_ ? node_->value : Complex{}; }
std::optional<GaussianRational> ExpPoly::exact_value() const {
    if (!node_) return GaussianRational{};
    return node_->exact;
}
std::size_t ExpPoly::variable_index() const { return node_->index; }
unsigned ExpPoly::exponent() const { return node_->exponent; }
std::span<const ExpPoly> ExpPoly::children() const {
    if (!node_) return {};
    return node_->children;
}

Complex ExpPoly::evaluate(std::span<const Complex> point) const {
    if (point.size() != nvars_) throw DimensionError("evaluation point has wrong dimension");
    switch (kind()) {
        case Kind::constant: return constant_value();
        case Kind::variable: return point[node_->index];
        case Kind::sum: {
            Complex s{};
            for (const auto& c : node_->children) s += c.evaluate(point);
            return s;
        }
        case Kind::product: {
            Complex p{1.0, 0.0};
            for (const auto& c : node_->children) p *= c.evaluate(point);
            return p;
        }
        case Kind::power: {
            const Complex b = node_->children[0].evaluate(point);
            Complex r{1.0, 0.0};
            for (unsigned k = 0; k < node_->exponent; ++k) r *= b;
            return r;
        }
        case Kind::exp: return std::exp(node_->children[0].evaluate(point));
    }
    return {};
}

ExpPoly ExpPoly::derivative(std::size_t var) const {
    if (var >= nvars_) throw DimensionError("derivative variable out of range");
    const auto zero = constant(nvars_, GaussianRational{});
    switch (kind()) {
        case Kind::constant: return zero;
        case Kind::variable: return node_->index == var ? constant(nvars_, GaussianRational{1}) : zero;
        case Kind::sum: {
            std::vector<ExpPoly> terms;
            for (const auto& c : node_->children) terms.push_back(c.derivative(var));
            return sum(nvars_, std::move(terms));
        }
        case Kind::product: {
            std::vector<ExpPoly> terms;
            const auto& ch = node_->children;
            for (std::size_t i = 0; i < ch.size(); ++i) {
                ExpPoly d = ch[i].derivative(var);
                if (d.is_zero()) continue;
                std::vector<ExpPoly> factors;
                for (std::size_t j = 0; j < ch.size(); ++j) factors.push_back(j == i ? d : ch[j]);
                terms.push_back(product(nvars_, std::move(factors)));
            }
            return sum(nvars_, std::move(terms));
        }
        case Kind::power: {
            const ExpPoly& base = node_->children[0];
            ExpPoly d = base.derivative(var);
            if (d.is_zero()) return zero;
            return product(nvars_, {constant(nvars_, GaussianRational(static_cast<long>(node_->exponent))),
                                    power(base, node_->exponent - 1), d});
        }
        case Kind::exp: {
            ExpPoly d = node_->children[0].derivative(var);
            if (d.is_zero()) return zero;
            return product(nvars_, {d, *this});
        }
    }
    return zero;
}

bool ExpPoly::contains_exp() const {
    if (kind() == Kind::exp) return true;
    return std::any_of(children().begin(), children().end(), [](const ExpPoly& c) { return c.contains_exp(); });
}

Poly ExpPoly::to_poly() const {
    switch (kind()) {
        case Kind::constant: {
            auto e = exact_value();
            if (!e) throw DomainError("expression has an inexact constant; cannot convert to an exact polynomial");
            return Poly::constant(nvars_, *e);
        }
        case Kind::variable: return Poly::variable(nvars_, node_->index);
        case Kind::sum: {
            Poly s(nvars_);
            for (const auto& c : node_->children) s += c.to_poly();
            return s;
        }
        case Kind::product: {
            Poly p = Poly::constant(nvars_, 1);
            for (const auto& c : node_->children) p = p * c.to_poly();
            return p;
        }
        case Kind::power: return node_->children[0].to_poly().pow(node_->exponent);
        case Kind::exp:
            throw DomainError("expression contains exp(); transcendental data is not a polynomial");
    }
    return Poly(nvars_);
}

namespace {
// Binding strength used to decide where parentheses are needed.
int precedence(const ExpPoly& e, const std::string& text) {
    switch (e.kind()) {
        case ExpPoly::Kind::sum: return 1;
        case ExpPoly::Kind::product: return 2;
        case ExpPoly::Kind::constant: return (!text.empty() && text[0] == '-') ? 2 : 4;
        default: return 4;
    }
}
std::string wrap(const ExpPoly& e, const VariableNames& names, int min_prec) {
    std::string s = e.to_string(names);
    return precedence(e, s) < min_prec ? "(" + s + ")" : s;
}
}  // namespace

std::string ExpPoly::to_string(const VariableNames& names) const {
    switch (kind()) {
        case Kind::constant: return format_constant(constant_value(), exact_value());
        case Kind::variable: return names.at(node_->index);
        case Kind::sum: {
            std::string out;
            for (const auto& c : node_->children) {
                std::string s = wrap(c, names, 1);
                if (out.empty()) {
                    out = s;
                } else if (s.size() > 1 && s[0] == '-') {
                    out += " - " + s.substr(1);
                } else {
                    out += " + " + s;
                }
            }
            return out;
        }
        case Kind::product: {
            std::string out;
            const auto& ch = node_->children;
            std::size_t start = 0;
            if (ch[0].is_constant() && ch[0].exact_value() && *ch[0].exact_value() == GaussianRational(-1)) {
                out = "-";
                start = 1;
            }
            for (std::size_t i = start; i < ch.size(); ++i) {
                if (i > start) out += "*";
                out += (i == 0 && ch[i].is_constant()) ? ch[i].to_string(names) : wrap(ch[i], names, 3);
            }
            return out;
        }
        case Kind::power: return wrap(node_->children[0], names, 4) + "^" + std::to_string(node_->exponent);
        case Kind::exp: return "exp(" + node_->children[0].to_string(names) + ")";
    }
    return "?";
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) { return ExpPoly::sum(a.nvars_, {a, b}); }
ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return ExpPoly::sum(a.nvars_, {a, -b}); }
ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) { return ExpPoly::product(a.nvars_, {a, b}); }
ExpPoly ExpPoly::operator-() const { return product(nvars_, {constant(nvars_, GaussianRational{-1}), *this}); }

std::vector<Complex> ExpPolySystem::evaluate(std::span<const Complex> point) const {
    std::vector<Complex> out;
    out.reserve(equations.size());
    for (const auto& e : equations) out.push_back(e.evaluate(point));
    return out;
}

std::vector<std::vector<ExpPoly>> ExpPolySystem::jacobian() const {
    std::vector<std::vector<ExpPoly>> J;
    for (const auto& e : equations) {
        std::vector<ExpPoly> row;
        for (std::size_t v = 0; v < nvars; ++v) row.push_back(e.derivative(v));
        J.push_back(std::move(row));
    }
    return J;
}

}  // namespace lgkit
