#pragma once

#include <span>
#include <string>
#include <string_view>

#include "lgkit/expr.hpp"
#include "lgkit/poly.hpp"

namespace lgkit {

// Text grammar shared by the CLI and problem files:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*        division only by constants
//   unary   := ('-'|'+') unary | power
//   power   := primary ['^' integer]
//   primary := number | 'i' | variable | 'exp' '(' expr ')' | '(' expr ')'
//
// Numbers are integers or decimals (read exactly, 0.25 = 1/4). Variables are
// x1..xN unless an explicit name list is given.

/// Smallest N such that every xK in `text` has K <= N (0 if none).
std::size_t infer_variable_count(std::string_view text);

/// Variables for a group of expressions: x1..xN (N the largest index seen,
/// at least min_nvars) when only indexed names occur, otherwise every name in
/// order of first appearance.
VariableNames infer_variables(std::span<const std::string> texts, std::size_t min_nvars = 1);

ExpPoly parse_expression(std::string_view text, const VariableNames& names);
ExpPoly parse_expression(std::string_view text, std::size_t min_nvars = 1);

/// Exact polynomial; rejects exp() and other transcendental input.
Poly parse_poly(std::string_view text, const VariableNames& names);
Poly parse_poly(std::string_view text, std::size_t min_nvars = 1);

}  // namespace lgkit
