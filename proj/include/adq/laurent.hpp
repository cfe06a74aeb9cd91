#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adq/errors.hpp"
#include "adq/rational.hpp"

namespace adq {

using Exponent = std::int32_t;
using Monomial = std::vector<Exponent>;

/// Exponents beyond this magnitude are refused.
inline constexpr Exponent kExponentCap = 64;

/// Descending graded-lex: larger signed total degree first, then lexicographically larger.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Names of the variables a polynomial lives over. A paired set stores the
/// holomorphic block first and the conjugate block second, so index i and
/// i + m are conjugates of each other.
class VariableSet {
 public:
  VariableSet() = default;

  /// Conjugate names get a "b" suffix.
  static VariableSet paired(std::vector<std::string> holomorphic);
  static VariableSet symbols(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool is_paired() const { return paired_; }
  std::size_t holomorphic_count() const { return paired_ ? names_.size() / 2 : names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t conjugate_of(std::size_t i) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
  bool paired_ = false;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(Monomial exps, const Rational& c = Rational(1));
  static LaurentPoly variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c * x^e, merging like terms and dropping zeros.
  void add_term(const Monomial& e, const Rational& c);

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// The value if the polynomial is a constant (including zero).
  std::optional<Rational> constant_value() const;
  /// Coefficient of x^e (zero if absent).
  Rational coefficient(const Monomial& e) const;

  /// Largest sum of absolute exponents over the terms.
  int total_degree() const;
  /// Per-variable (min, max) exponents; requires a nonzero polynomial.
  std::pair<Exponent, Exponent> exponent_range(std::size_t var) const;

  LaurentPoly pow(unsigned k) const;
  /// Re-embeds into a larger variable set (new variables get exponent 0).
  LaurentPoly widened(std::size_t nvars) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly& operator/=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator/(LaurentPoly a, const Rational& c) { return a /= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void adopt_width(const LaurentPoly& o);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Multiplies a monomial by another with the exponent cap enforced.
Monomial monomial_product(const Monomial& a, const Monomial& b);
Monomial monomial_scaled(const Monomial& a, Exponent k);

/// The stored representation is already canonical; this returns a copy.
LaurentPoly normalize(const LaurentPoly& p);

LaurentPoly partial_derivative(const LaurentPoly& p, std::size_t var);
/// x_v * d/dx_v, which stays inside the Laurent ring without shifting exponents.
LaurentPoly log_derivative(const LaurentPoly& p, std::size_t var);

/// Composes p with per-variable images. Negative powers need monomial images.
LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images);

/// Swaps the holomorphic and conjugate blocks of a paired polynomial.
LaurentPoly conjugate(const LaurentPoly& p);

using Complex = std::complex<double>;
Complex evaluate(const LaurentPoly& p, std::span<const Complex> point);

class InexactDivision : public Error {
 public:
  InexactDivision(const std::string& what, LaurentPoly remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// q with q * den = num. Variables that carry no negative exponent in either
/// operand are treated as polynomial variables, so z1 z2 / z3 is refused.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// Rewrites x_var^power to a monomial image (the image must avoid rewritten variables).
struct PowerRule {
  std::size_t var;
  Exponent power;
  Monomial image;
};

/// Rewrites the product of the listed variables to a nonzero constant.
struct ProductRule {
  std::vector<std::size_t> vars;
  Rational value;
};

class QuotientIdeal {
 public:
  QuotientIdeal() = default;
  explicit QuotientIdeal(std::size_t nvars) : nvars_(nvars) {}

  void add(PowerRule rule);
  void add(ProductRule rule);

  std::size_t nvars() const { return nvars_; }
  bool empty() const { return power_rules_.empty() && product_rules_.empty(); }
  /// Generators of the ideal as polynomials (lhs - rhs).
  std::vector<LaurentPoly> relations() const;
  /// Normal form of one term; returns the coefficient factor.
  Rational reduce_monomial(Monomial& e) const;

 private:
  void check_confluent() const;

  std::size_t nvars_ = 0;
  std::vector<PowerRule> power_rules_;
  std::vector<ProductRule> product_rules_;
};

LaurentPoly reduce_mod(const LaurentPoly& p, const QuotientIdeal& ideal);

/// Human-readable form such as "2*z1^2*z2b - 1/3".
std::string to_string(const LaurentPoly& p, const VariableSet& vars);

}  // namespace adq
