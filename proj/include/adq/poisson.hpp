#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adq/laurent.hpp"
#include "adq/symmetry.hpp"

namespace adq {

/// Coefficients of the normalized bracket B = (i/2){.,.} on a paired variable
/// set: B(z_u, conj z_v) = scale * C[u][v] * z_u * conj(z_v), zero on
/// holomorphic-holomorphic and antiholomorphic-antiholomorphic pairs.
struct BracketStructure {
  std::vector<std::vector<Rational>> coefficients;
  Rational scale = 1;

  std::size_t holomorphic_count() const { return coefficients.size(); }
  static BracketStructure diagonal(std::size_t m, const Rational& c = Rational(1));
};

LaurentPoly bracket(const LaurentPoly& f, const LaurentPoly& g, const BracketStructure& s);

using BracketFn = std::function<LaurentPoly(const LaurentPoly&, const LaurentPoly&)>;

/// sigma_n - 1 and its conjugate, with the ideal they generate.
struct ConstraintPair {
  LaurentPoly holomorphic;
  LaurentPoly antiholomorphic;
  QuotientIdeal ideal;
};

ConstraintPair determinant_constraints(int n);

/// The corrected bracket on the constraint surface; every piece is reduced
/// modulo the constraint ideal, where the denominators become constants.
LaurentPoly dirac_bracket(const LaurentPoly& f, const LaurentPoly& g, const BracketStructure& s,
                          const ConstraintPair& c);

/// The same correction computed in the ambient ring, dividing exactly by the
/// unreduced denominators. It preserves bidegree and agrees with
/// dirac_bracket after reduction.
LaurentPoly dirac_bracket_lifted(const LaurentPoly& f, const LaurentPoly& g,
                                 const BracketStructure& s, const LaurentPoly& top,
                                 const LaurentPoly& top_conjugate);

struct TauCheck {
  int j1, k1, j2, k2;
  int coefficient;
  bool pass;
  LaurentPoly residual;
};

/// Checks B(t(j1,k1), t(j2,k2)) = (j1 k2 - j2 k1) t(j1+j2, k1+k2) over all
/// distinct pairs of indices with j + k <= cap, unit coefficients.
std::vector<TauCheck> verify_tau_theorem(int n, int cap);

class NoRepresentationWithinCap : public Error {
 public:
  NoRepresentationWithinCap(const std::string& what, LaurentPoly residual)
      : Error(what), residual_(std::move(residual)) {}
  const LaurentPoly& residual() const { return residual_; }

 private:
  LaurentPoly residual_;
};

struct NamedPolynomial {
  std::string name;
  LaurentPoly value;
};

struct Rewrite {
  VariableSet names;       // one symbol per generator
  LaurentPoly expression;  // polynomial in those symbols
};

/// Writes p as a polynomial in the generators. Generator monomials are
/// enumerated by weighted degree (weight = total degree of the generator)
/// up to the cap, then lexicographically; the earliest independent columns
/// are used, which makes the answer deterministic.
Rewrite rewrite_in_generators(const LaurentPoly& p, const std::vector<NamedPolynomial>& gens,
                              int degree_cap, const QuotientIdeal& ideal = {},
                              const FiniteGroup* group = nullptr);

/// Substitutes generator values back into a rewrite.
LaurentPoly expand_rewrite(const Rewrite& r, const std::vector<NamedPolynomial>& gens,
                           const QuotientIdeal& ideal = {});

struct ClosureRow {
  int holomorphic_degree;
  int antiholomorphic_degree;
  std::size_t reached;
  std::size_t full;
};

struct ClosureReport {
  std::vector<ClosureRow> rows;
  bool complete() const;
};

/// Dimension of the S_n-invariants of bidegree (p, q) in z1..zn and their
/// conjugates: the number of monomial orbits.
std::size_t invariant_dimension(int n, int p, int q);

/// Closes the seeds under brackets and products, bidegree by bidegree, in the
/// polynomial ring on paired z1..zn, and compares each bidegree's span with
/// the full invariant dimension. Seeds must be bihomogeneous.
ClosureReport poisson_generation_closure(int n, const std::vector<LaurentPoly>& seeds,
                                         const BracketFn& bracket, int total_degree_cap);

struct BracketAudit {
  int trials = 0;
  int antisymmetry_failures = 0;
  int leibniz_failures = 0;
  int jacobi_failures = 0;
  bool pass() const { return antisymmetry_failures + leibniz_failures + jacobi_failures == 0; }
};

/// Random polynomial with nonnegative exponents over the given width.
LaurentPoly random_polynomial(std::size_t nvars, int max_degree, int max_terms,
                              std::mt19937_64& rng);

/// Antisymmetry, Leibniz and Jacobi on random triples, compared modulo the ideal.
BracketAudit jacobi_check(const BracketFn& bracket, std::size_t nvars, int trials,
                          int max_degree, std::uint64_t seed, const QuotientIdeal& ideal = {});

}  // namespace adq
