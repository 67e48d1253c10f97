#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgkit/gaussian_rational.hpp"
#include "lgkit/poly.hpp"

namespace lgkit {

using Complex = std::complex<double>;

/// Entire function built from constants, variables, sums, products,
/// non-negative integer powers and exp(). Immutable; copies share structure.
///
/// The factory functions simplify on construction: nested sums/products are
/// flattened, constants are folded (exactly when every folded constant is
/// exact), zero summands and unit factors are dropped.
class ExpPoly {
public:
    enum class Kind { constant, variable, sum, product, power, exp };

    static ExpPoly constant(std::size_t nvars, Complex value);
    static ExpPoly constant(std::size_t nvars, const GaussianRational& value);
    static ExpPoly variable(std::size_t nvars, std::size_t index);
    static ExpPoly sum(std::size_t nvars, std::vector<ExpPoly> terms);
    static ExpPoly product(std::size_t nvars, std::vector<ExpPoly> factors);
    static ExpPoly power(const ExpPoly& base, unsigned exponent);
    static ExpPoly exp(const ExpPoly& argument);
    static ExpPoly from_poly(const Poly& p);

    std::size_t nvars() const { return nvars_; }
    Kind kind() const;
    bool is_constant() const { return kind() == Kind::constant; }
    bool is_zero() const;
    bool is_one() const;
    /// Value of a constant node.
    Complex constant_value() const;
    std::size_t variable_index() const;
    unsigned exponent() const;
    std::span<const ExpPoly> children() const;

    Complex evaluate(std::span<const Complex> point) const;
    ExpPoly derivative(std::size_t var) const;
    bool contains_exp() const;

    /// Exact polynomial; throws DomainError for transcendental or inexact input.
    Poly to_poly() const;

    std::string to_string(const VariableNames& names) const;
    std::string to_string() const { return to_string(default_variables(nvars_)); }

    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    ExpPoly operator-() const;

private:
    struct Node;
    ExpPoly(std::size_t nvars, std::shared_ptr<const Node> node) : nvars_(nvars), node_(std::move(node)) {}
    std::optional<GaussianRational> exact_value() const;

    std::size_t nvars_ = 0;
    std::shared_ptr<const Node> node_;
};

struct ExpPolySystem {
    std::size_t nvars = 0;
    std::vector<ExpPoly> equations;

    /// Values of every equation at `point`.
    std::vector<Complex> evaluate(std::span<const Complex> point) const;
    /// Row-major symbolic Jacobian: jacobian()[e][v] = d equation_e / d x_v.
    std::vector<std::vector<ExpPoly>> jacobian() const;
};

}  // namespace lgkit
