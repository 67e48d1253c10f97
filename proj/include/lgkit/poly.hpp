#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lgkit/gaussian_rational.hpp"

namespace lgkit {

using VariableNames = std::vector<std::string>;

/// Names x1..xN.
VariableNames default_variables(std::size_t nvars);

class Monomial;
/// All monomials of total degree <= max_degree, by increasing degree then grevlex.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned max_degree);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t nvars, std::size_t var, std::uint32_t power = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t operator[](std::size_t var) const { return exps_[var]; }
    std::span<const std::uint32_t> exponents() const { return exps_; }

    bool is_one() const { return degree_ == 0; }
    bool divides(const Monomial& other) const;
    /// Index of the variable if this is a pure power x_v^a (a >= 1).
    std::optional<std::size_t> pure_power_variable() const;

    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;

    std::string to_string(const VariableNames& names) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    // Storage order only (plain lex on the exponent vector); term orders live in MonomialOrder.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

class MonomialOrder {
public:
    enum class Kind { lex, graded_lex, graded_reverse_lex };

    MonomialOrder(Kind kind, std::vector<std::size_t> permutation);

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grlex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }
    std::string name() const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    Kind kind_;
    // perm_[0] is the most significant variable.
    std::vector<std::size_t> perm_;
};

/// Multivariate polynomial over Q(i). No zero coefficients are stored.
class Poly {
public:
    using Terms = std::map<Monomial, GaussianRational>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const GaussianRational& c);
    static Poly variable(std::size_t nvars, std::size_t var);
    static Poly term(const GaussianRational& c, const Monomial& m);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    GaussianRational coefficient(const Monomial& m) const;

    /// Leading monomial/coefficient under `order`. Requires a nonzero polynomial.
    const Monomial& leading_monomial(const MonomialOrder& order) const;
    const GaussianRational& leading_coefficient(const MonomialOrder& order) const;

    void add_term(const GaussianRational& c, const Monomial& m);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussianRational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
    friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly mul_term(const GaussianRational& c, const Monomial& m) const;
    Poly pow(unsigned k) const;

    Poly derivative(std::size_t var) const;
    /// Substitutes polynomials (all in a common ring) for the variables.
    Poly substitute(std::span<const Poly> values) const;

    std::string to_string(const VariableNames& names) const;
    std::string to_string() const { return to_string(default_variables(nvars_)); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

private:
    std::size_t nvars_;
    Terms terms_;
};

class Ideal {
public:
    Ideal(std::size_t nvars, std::vector<Poly> generators);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Poly>& generators() const { return generators_; }

private:
    std::size_t nvars_;
    std::vector<Poly> generators_;
};

class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Poly> basis, MonomialOrder order, Ideal source);

    const std::vector<Poly>& basis() const { return basis_; }
    const MonomialOrder& order() const { return order_; }
    const Ideal& source() const { return source_; }
    std::size_t nvars() const { return source_.nvars(); }
    const std::vector<Monomial>& leading_monomials() const { return leads_; }
    /// True iff the ideal is the whole ring.
    bool is_unit() const;

private:
    std::vector<Poly> basis_;
    MonomialOrder order_;
    Ideal source_;
    std::vector<Monomial> leads_;
};

struct GroebnerOptions {
    /// Upper bound on pending critical pairs; exceeding it raises ResourceLimitError.
    std::size_t max_pairs = 200000;
};

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
/// Pairs are selected by the sugar strategy with ties broken by lcm then index.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options = {});

/// Remainder of full division of p by the basis.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

struct QuotientBasis {
    bool infinite = false;
    std::vector<Monomial> standard_monomials;  // empty when infinite
    std::size_t dimension() const { return standard_monomials.size(); }
};

/// Standard monomials of R/<gb>. Infinite exactly when some variable has no pure
/// power among the leading monomials; throws InconclusiveError when the
/// staircase is still open at degree_cap.
QuotientBasis quotient_basis(const GroebnerBasis& gb, unsigned degree_cap = 64);

/// True when the two bases generate the same ideal (mutual reduction to zero).
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

// Ways of presenting the tangent frame used to form the critical ideal.
struct AffineFrame {};
struct HypersurfaceFrame {
    Poly f;
};
struct CompleteIntersectionFrame {
    std::vector<Poly> equations;
    /// Each entry is a vector field on the ambient space given by N components.
    std::vector<std::vector<Poly>> tangent_generators;
};
using FrameSpec = std::variant<AffineFrame, HypersurfaceFrame, CompleteIntersectionFrame>;

/// Critical ideal of W restricted to the space described by `frame`
/// (coordinate partials; f with the 2x2 minors of (dW, df); or the CI equations
/// with contractions of dW against the supplied tangent generators).
Ideal jacobi_ideal(const Poly& W, const FrameSpec& frame);

/// Convenience: dimension of the Jacobi algebra via a grevlex basis.
QuotientBasis jacobi_quotient(const Poly& W, const FrameSpec& frame, unsigned degree_cap = 64);

}  // namespace lgkit
