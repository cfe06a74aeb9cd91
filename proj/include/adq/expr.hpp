#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "adq/laurent.hpp"

namespace adq {

/// Callbacks that give meaning to names and brackets inside an expression.
struct ExprContext {
  std::size_t nvars = 0;
  /// Value of a bare name such as "s1", "t(2,1)" or "Z1b".
  std::function<LaurentPoly(std::string_view)> resolve;
  /// Optional override for name^k; lets a caller admit names that only make
  /// sense in even powers. Returning nullopt falls back to resolve(name)^k.
  std::function<std::optional<LaurentPoly>(std::string_view, long)> resolve_power;
  /// Optional value of "{f, g}".
  std::function<LaurentPoly(const LaurentPoly&, const LaurentPoly&)> bracket;
};

/// Grammar: sums and differences of products and quotients of powers;
/// atoms are rationals, names (optionally suffixed "(i,j)"), parenthesized
/// expressions, and brackets "{f, g}". Division by a polynomial must be exact.
LaurentPoly parse_expression(std::string_view text, const ExprContext& ctx);

/// Splits "lhs = rhs"; a missing "=" means "= 0".
std::pair<std::string, std::string> split_equation(std::string_view text);

/// Every distinct name token in the text, in order of appearance.
std::vector<std::string> expression_names(std::string_view text);

}  // namespace adq
