#include "adq/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace adq {

namespace {

long long signed_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0LL);
}

Exponent checked(long long e) {
  if (e > kExponentCap || e < -kExponentCap)
    throw ExponentOverflow("exponent " + std::to_string(e) + " exceeds the cap of " +
                           std::to_string(kExponentCap));
  return static_cast<Exponent>(e);
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const long long da = signed_degree(a), db = signed_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------- VariableSet

VariableSet VariableSet::paired(std::vector<std::string> holomorphic) {
  VariableSet vs;
  vs.paired_ = true;
  vs.names_ = holomorphic;
  for (const auto& n : holomorphic) vs.names_.push_back(n + "b");
  return vs;
}

VariableSet VariableSet::symbols(std::vector<std::string> names) {
  VariableSet vs;
  vs.names_ = std::move(names);
  return vs;
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableSet::conjugate_of(std::size_t i) const {
  if (!paired_) throw DomainError("variable set has no conjugation pairing");
  const std::size_t m = names_.size() / 2;
  return i < m ? i + m : i - m;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Monomial exps, const Rational& c) {
  for (auto e : exps) checked(e);
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Monomial e(nvars, 0);
  e[index] = checked(power);
  return monomial(std::move(e));
}

void LaurentPoly::add_term(const Monomial& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != nvars_) {
    if (terms_.empty() && nvars_ == 0)
      nvars_ = e.size();
    else
      throw DomainError("monomial width does not match polynomial");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Monomial& LaurentPoly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

std::optional<Rational> LaurentPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (std::any_of(e.begin(), e.end(), [](Exponent x) { return x != 0; })) return std::nullopt;
  return c;
}

Rational LaurentPoly::coefficient(const Monomial& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::total_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += std::abs(x);
    best = std::max(best, d);
  }
  return best;
}

std::pair<Exponent, Exponent> LaurentPoly::exponent_range(std::size_t var) const {
  if (terms_.empty()) throw DomainError("zero polynomial has no exponent range");
  Exponent lo = kExponentCap, hi = -kExponentCap;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e.at(var));
    hi = std::max(hi, e.at(var));
  }
  return {lo, hi};
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(nvars_, Rational(1));
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::widened(std::size_t nvars) const {
  if (nvars < nvars_) throw DomainError("cannot narrow a polynomial");
  LaurentPoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Monomial w = e;
    w.resize(nvars, 0);
    out.terms_.emplace(std::move(w), c);
  }
  return out;
}

void LaurentPoly::adopt_width(const LaurentPoly& o) {
  if (nvars_ == o.nvars_) return;
  if (nvars_ == 0) {
    *this = widened(o.nvars_);
    return;
  }
  if (o.nvars_ == 0) return;
  throw DomainError("polynomials over different variable counts (" + std::to_string(nvars_) +
                    " vs " + std::to_string(o.nvars_) + ")");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  adopt_width(o);
  const LaurentPoly& src = o.nvars_ == nvars_ ? o : o.widened(nvars_);
  for (const auto& [e, c] : src.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  adopt_width(o);
  const LaurentPoly& src = o.nvars_ == nvars_ ? o : o.widened(nvars_);
  for (const auto& [e, c] : src.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) {
    if (a.nvars_ == 0) return a.widened(b.nvars_) * b;
    if (b.nvars_ == 0) return a * b.widened(a.nvars_);
    throw DomainError("polynomials over different variable counts");
  }
  LaurentPoly out(a.nvars_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(monomial_product(ea, eb), prod);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly& LaurentPoly::operator/=(const Rational& c) {
  if (c == 0) throw DomainError("division by zero");
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) {
    if (a.nvars_ == 0) return a.widened(b.nvars_).terms_ == b.terms_;
    if (b.nvars_ == 0) return a.terms_ == b.widened(a.nvars_).terms_;
    return false;
  }
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- operations

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = checked(static_cast<long long>(a[i]) + b[i]);
  return out;
}

Monomial monomial_scaled(const Monomial& a, Exponent k) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked(static_cast<long long>(a[i]) * k);
  return out;
}

LaurentPoly normalize(const LaurentPoly& p) { return p; }

LaurentPoly partial_derivative(const LaurentPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw DomainError("variable index out of range");
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Monomial d = e;
    d[var] = checked(static_cast<long long>(e[var]) - 1);
    out.add_term(d, c * e[var]);
  }
  return out;
}

LaurentPoly log_derivative(const LaurentPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw DomainError("variable index out of range");
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (e[var] != 0) out.add_term(e, c * e[var]);
  return out;
}

LaurentPoly substitute(const LaurentPoly& p, std::span<const LaurentPoly> images) {
  if (images.size() != p.nvars()) throw DomainError("substitution needs one image per variable");
  std::size_t width = 0;
  for (const auto& im : images) width = std::max(width, im.nvars());
  std::vector<LaurentPoly> inverse(images.size());
  std::vector<bool> has_inverse(images.size(), false);
  LaurentPoly out(width);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(width, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) {
        term *= images[i].pow(static_cast<unsigned>(e[i]));
      } else if (e[i] < 0) {
        if (!has_inverse[i]) {
          if (!images[i].is_monomial())
            throw NonInvertibleImage("negative power of variable " + std::to_string(i) +
                                     " meets a non-monomial image");
          const auto& [m, k] = *images[i].terms().begin();
          inverse[i] = LaurentPoly::monomial(monomial_scaled(m, -1), Rational(1) / k);
          has_inverse[i] = true;
        }
        term *= inverse[i].pow(static_cast<unsigned>(-e[i]));
      }
    }
    out += term;
  }
  return out;
}

LaurentPoly conjugate(const LaurentPoly& p) {
  if (p.nvars() % 2 != 0) throw DomainError("conjugation needs a paired variable set");
  const std::size_t m = p.nvars() / 2;
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Monomial s(e.size());
    for (std::size_t i = 0; i < m; ++i) {
      s[i] = e[i + m];
      s[i + m] = e[i];
    }
    out.add_term(s, c);
  }
  return out;
}

Complex evaluate(const LaurentPoly& p, std::span<const Complex> point) {
  if (point.size() != p.nvars()) throw DomainError("evaluation point has the wrong dimension");
  constexpr double kPoleTolerance = 1e-12;
  Complex sum{0.0, 0.0};
  for (const auto& [e, c] : p.terms()) {
    Complex term{to_double(c), 0.0};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && std::abs(point[i]) <= kPoleTolerance)
        throw PoleAtPoint("variable " + std::to_string(i) + " vanishes under a negative power");
      Complex base = e[i] > 0 ? point[i] : Complex(1.0) / point[i];
      for (int k = std::abs(e[i]); k > 0; --k) term *= base;
    }
    sum += term;
  }
  return sum;
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly(std::max(num.nvars(), den.nvars()));
  if (num.nvars() != den.nvars()) {
    if (den.nvars() == 0) return exact_divide(num, den.widened(num.nvars()));
    if (num.nvars() == 0) return exact_divide(num.widened(den.nvars()), den);
    throw DomainError("division across different variable counts");
  }
  const std::size_t n = num.nvars();
  std::vector<Exponent> lo(n), hi(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [nlo, nhi] = num.exponent_range(v);
    auto [dlo, dhi] = den.exponent_range(v);
    lo[v] = nlo - dlo;
    hi[v] = nhi - dhi;
    if (nlo >= 0 && dlo >= 0) lo[v] = std::max<Exponent>(lo[v], 0);
  }
  const Monomial& lead = den.leading_monomial();
  const Rational& lead_c = den.leading_coefficient();
  LaurentPoly quotient(n), remainder = num;
  while (!remainder.is_zero()) {
    Monomial t(n);
    bool inside = true;
    for (std::size_t v = 0; v < n; ++v) {
      t[v] = remainder.leading_monomial()[v] - lead[v];
      if (t[v] < lo[v] || t[v] > hi[v]) inside = false;
    }
    if (!inside) throw InexactDivision("divisor does not divide the numerator", remainder);
    const Rational c = remainder.leading_coefficient() / lead_c;
    quotient.add_term(t, c);
    remainder -= LaurentPoly::monomial(t, c) * den;
  }
  return quotient;
}

// ---------------------------------------------------------------- ideal

void QuotientIdeal::add(PowerRule rule) {
  if (rule.var >= nvars_ || rule.image.size() != nvars_ || rule.power <= 0)
    throw NonConfluentIdeal("malformed power rule");
  power_rules_.push_back(std::move(rule));
  check_confluent();
}

void QuotientIdeal::add(ProductRule rule) {
  if (rule.vars.empty() || rule.value == 0) throw NonConfluentIdeal("malformed product rule");
  for (auto v : rule.vars)
    if (v >= nvars_) throw NonConfluentIdeal("product rule variable out of range");
  std::sort(rule.vars.begin(), rule.vars.end());
  if (std::adjacent_find(rule.vars.begin(), rule.vars.end()) != rule.vars.end())
    throw NonConfluentIdeal("product rule repeats a variable");
  product_rules_.push_back(std::move(rule));
  check_confluent();
}

void QuotientIdeal::check_confluent() const {
  // Left-hand sides must not overlap, and no image may reintroduce a rewritten variable.
  std::vector<int> owner(nvars_, -1);
  int id = 0;
  for (const auto& r : power_rules_) {
    if (owner[r.var] != -1) throw NonConfluentIdeal("overlapping rewrite rules");
    owner[r.var] = id++;
  }
  for (const auto& r : product_rules_) {
    for (auto v : r.vars) {
      if (owner[v] != -1) throw NonConfluentIdeal("overlapping rewrite rules");
      owner[v] = id;
    }
    ++id;
  }
  for (const auto& r : power_rules_)
    for (std::size_t v = 0; v < nvars_; ++v)
      if (r.image[v] != 0 && owner[v] != -1)
        throw NonConfluentIdeal("power rule image involves a rewritten variable");
}

Rational QuotientIdeal::reduce_monomial(Monomial& e) const {
  Rational factor(1);
  for (const auto& r : power_rules_) {
    const Exponent q = static_cast<Exponent>(std::floor(static_cast<double>(e[r.var]) / r.power));
    if (q == 0) continue;
    e[r.var] -= q * r.power;
    e = monomial_product(e, monomial_scaled(r.image, q));
  }
  for (const auto& r : product_rules_) {
    Exponent q = e[r.vars.front()];
    for (auto v : r.vars) q = std::min(q, e[v]);
    if (q == 0) continue;
    for (auto v : r.vars) e[v] -= q;
    factor *= power(r.value, q);
  }
  return factor;
}

std::vector<LaurentPoly> QuotientIdeal::relations() const {
  std::vector<LaurentPoly> out;
  for (const auto& r : power_rules_) {
    LaurentPoly lhs = LaurentPoly::variable(nvars_, r.var, r.power);
    out.push_back(lhs - LaurentPoly::monomial(r.image));
  }
  for (const auto& r : product_rules_) {
    Monomial m(nvars_, 0);
    for (auto v : r.vars) m[v] = 1;
    out.push_back(LaurentPoly::monomial(m) - LaurentPoly::constant(nvars_, r.value));
  }
  return out;
}

LaurentPoly reduce_mod(const LaurentPoly& p, const QuotientIdeal& ideal) {
  if (ideal.empty() || p.is_zero()) return p;
  if (p.nvars() != ideal.nvars()) throw DomainError("ideal and polynomial widths differ");
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Monomial m = e;
    const Rational f = ideal.reduce_monomial(m);
    out.add_term(m, c * f);
  }
  return out;
}

std::string to_string(const LaurentPoly& p, const VariableSet& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool wrote = false;
    if (mag != 1 || std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) {
      os << to_display(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << (i < vars.size() ? vars.name(i) : "x" + std::to_string(i));
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace adq
