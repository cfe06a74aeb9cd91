#pragma once

#include <complex>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "adq/expr.hpp"
#include "adq/laurent.hpp"

namespace adq::testing {

/// Parses text whose names are the variables of `vars`.
inline LaurentPoly poly(std::string_view text, const VariableSet& vars) {
  ExprContext ctx;
  ctx.nvars = vars.size();
  ctx.resolve = [&](std::string_view name) {
    const auto i = vars.index_of(name);
    if (!i) throw UnknownGenerator(std::string(name));
    return LaurentPoly::variable(vars.size(), *i);
  };
  return parse_expression(text, ctx);
}

/// Holomorphic coordinates followed by their conjugates.
inline std::vector<Complex> paired_point(const std::vector<Complex>& z) {
  std::vector<Complex> out = z;
  for (auto c : z) out.push_back(std::conj(c));
  return out;
}

inline std::vector<Complex> random_torus(std::size_t n, std::mt19937_64& rng, double spread = 0.6) {
  std::uniform_real_distribution<double> radius(-spread, spread), angle(0.0, 6.283185307179586);
  std::vector<Complex> z;
  for (std::size_t i = 0; i < n; ++i) z.push_back(std::polar(std::exp(radius(rng)), angle(rng)));
  return z;
}

}  // namespace adq::testing
