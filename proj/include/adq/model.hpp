#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adq/expr.hpp"
#include "adq/poisson.hpp"
#include "adq/symmetry.hpp"

namespace adq {

struct GeneratorEntry {
  std::string name;
  std::string origin;  // short description of how the generator arises
  LaurentPoly value;
};

/// One group family at one rank: torus variables, torus relations, Weyl
/// group, bracket coefficients and named invariants.
struct TorusModel {
  Family family = Family::U;
  int rank = 0;
  VariableSet vars;
  QuotientIdeal ideal;
  FiniteGroup weyl;
  BracketStructure bracket;
  /// Names of the holomorphic generators (fundamental characters).
  std::vector<std::string> holomorphic;
  /// Fixed named invariants: holomorphic generators, conjugates, mixed ones.
  std::vector<GeneratorEntry> manifest;
  /// sigma_n - 1 and its conjugate for SU and G2.
  std::optional<ConstraintPair> constraint;
  /// U(n) only: sigma_n must stay away from zero.
  bool top_invertible = false;

  std::size_t holomorphic_count() const { return vars.holomorphic_count(); }

  /// Value of a generator name or torus variable, in normal form. Besides the
  /// manifest this accepts parametric names such as "s(2,1)" or "t(3,0)".
  LaurentPoly resolve(std::string_view name) const;
  LaurentPoly reduce(const LaurentPoly& p) const { return reduce_mod(p, ideal); }
  /// The model bracket in normal form; the literal Dirac bracket where a
  /// constraint is present.
  LaurentPoly poisson(const LaurentPoly& f, const LaurentPoly& g) const;
  ExprContext context() const;
  LaurentPoly parse(std::string_view text) const;
  std::vector<NamedPolynomial> named(const std::vector<std::string>& names) const;
  std::vector<NamedPolynomial> holomorphic_generators() const { return named(holomorphic); }
  /// Holomorphic generators followed by their conjugates.
  std::vector<NamedPolynomial> paired_generators() const;
};

TorusModel build_torus_model(Family family, int rank, const Rational& bracket_scale = Rational(1));

/// Parses "s(2,1)" style suffixes; nullopt if the text is not of that shape.
std::optional<std::pair<int, int>> parse_index_pair(std::string_view text);

}  // namespace adq
