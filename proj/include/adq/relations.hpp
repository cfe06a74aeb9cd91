#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "adq/model.hpp"

namespace adq {

/// Discriminant of a0 w^n + a1 w^(n-1) + ... + an, normalized so that a monic
/// polynomial gets prod_{i<j} (r_i - r_j)^2. Computed from the Sylvester
/// resultant of P and P'; coefficients may be polynomials in any ring.
LaurentPoly discriminant(std::span<const LaurentPoly> coefficients);
Complex discriminant(std::span<const Complex> coefficients);

/// Rewrites a symmetric polynomial in z1..zn (the first n variables) as a
/// polynomial in e1..en, returned over n symbols.
LaurentPoly symmetric_to_elementary(const LaurentPoly& p, std::size_t n);

/// Where the names of a relation are evaluated.
enum class RelationContext {
  Torus,       // generator names of the model
  U2Real,      // X, Y, U, V, sig over real coordinates x1, y1, x2, y2
  SU2Real,     // X, even powers of Y, b, plus the model names (rank-1 C model)
};

struct Relation {
  std::string tag;
  Family family;
  int rank;
  std::string lhs;
  std::string rhs;
  std::string origin;
  RelationContext context = RelationContext::Torus;
};

struct RelationCheck {
  bool pass;
  LaurentPoly residual;
  VariableSet vars;  // variables the residual lives over
};

/// Fixed relations that belong to one model each.
const std::vector<Relation>& relation_catalog();
/// Catalog entries for the model plus the rank-dependent family identities.
std::vector<Relation> model_relations(const TorusModel& model);
/// Looks a tag up in the catalog first, then among the model's generated relations.
std::optional<Relation> find_relation(const std::string& tag, const TorusModel* model = nullptr);

RelationCheck verify_relation(const TorusModel& model, const Relation& rel);

struct DerivedRelation {
  Relation relation;
  VariableSet names;  // s1..sn, s1b, s(1,1), ..., s(n-1,1)
  LaurentPoly beta;   // discriminant in s1..sn
  LaurentPoly alpha;
  RelationCheck check;
};

/// Clears the denominators of the U(n) expression of s(r,s) in terms of
/// s1..sn, s1b and the s(k,1): returns beta * s(r,s) = alpha, re-verified by
/// expansion on the torus.
DerivedRelation derive_relation(int n, int r, int s);

/// Candidates for the spin-family invariants A and B with
/// B(delta, conj delta) = A - 2 sigspin and delta conj(delta) = A + B.
/// Computed candidates; a closed form is known only for n <= 2.
struct SpinBracketSplit {
  LaurentPoly a;
  LaurentPoly b;
  bool invariant = false;  // both W-invariant
};
SpinBracketSplit spin_bracket_split(const TorusModel& model);

}  // namespace adq
