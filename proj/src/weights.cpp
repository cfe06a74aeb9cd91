#include "adq/weights.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace adq {

namespace {

RationalVector unit_vector(std::size_t n, std::size_t i, const Rational& c = Rational(1)) {
  RationalVector v(n, Rational(0));
  v[i] = c;
  return v;
}

RationalVector combine(const RationalVector& a, const RationalVector& b, int sb) {
  RationalVector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + Rational(sb) * b[i];
  return v;
}

RationalVector leading_ones(std::size_t n, std::size_t k, const Rational& c = Rational(1)) {
  RationalVector v(n, Rational(0));
  for (std::size_t i = 0; i < k; ++i) v[i] = c;
  return v;
}

int parity(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

enum class SignRule { None, All, Even, Global };

std::vector<WeylElement> signed_permutations(std::size_t n, SignRule rule) {
  std::vector<WeylElement> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const int p = parity(perm);
    if (rule == SignRule::None) {
      out.push_back({perm, std::vector<int>(n, 1), p});
      continue;
    }
    if (rule == SignRule::Global) {
      // -1 acts on the two-dimensional root plane with determinant +1
      out.push_back({perm, std::vector<int>(n, 1), p});
      out.push_back({perm, std::vector<int>(n, -1), p});
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const int flips = std::popcount(mask);
      if (rule == SignRule::Even && flips % 2 != 0) continue;
      std::vector<int> signs(n);
      for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1u ? -1 : 1;
      out.push_back({perm, signs, p * (flips % 2 == 0 ? 1 : -1)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

RationalVector project(const RationalVector& v) {
  Rational mean(0);
  for (const auto& x : v) mean += x;
  mean /= Rational(static_cast<long>(v.size()));
  RationalVector out(v);
  for (auto& x : out) x -= mean;
  return out;
}

long common_denominator(const std::vector<RationalVector>& vs) {
  long d = 1;
  for (const auto& v : vs)
    for (const auto& x : v) d = std::lcm(d, static_cast<long>(x.get_den().get_si()));
  return d;
}

}  // namespace

Rational WeightDatum::inner(const RationalVector& a, const RationalVector& b) const {
  const RationalVector pa = traceless ? project(a) : a;
  const RationalVector pb = traceless ? project(b) : b;
  Rational s(0);
  for (std::size_t i = 0; i < pa.size(); ++i) s += pa[i] * pb[i];
  return s;
}

RationalVector WeightDatum::apply(const WeylElement& w, const RationalVector& v) const {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(w.signs[i]) * v[w.perm[i]];
  return out;
}

std::string WeightDatum::convention() const {
  return traceless ? "sum of squares of the torus coordinates, restricted to the sum-zero hyperplane"
                   : "sum of squares of the torus coordinates";
}

WeightDatum weight_datum(Family family, int rank) {
  // validates the rank against the torus models
  (void)family_variables(family, rank);
  WeightDatum d;
  d.family = family;
  d.rank = rank;
  const auto n = static_cast<std::size_t>(rank);
  const Rational half(1, 2);
  switch (family) {
    case Family::U:
    case Family::SU: {
      d.ambient = n;
      d.traceless = family == Family::SU;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          d.positive_roots.push_back(combine(unit_vector(n, i), unit_vector(n, j), -1));
      for (std::size_t k = 1; k < n; ++k) d.fundamental.push_back(leading_ones(n, k));
      if (family == Family::U) d.fundamental.push_back(leading_ones(n, n));
      d.weyl = signed_permutations(n, SignRule::None);
      break;
    }
    case Family::C:
    case Family::B:
    case Family::SpinB:
    case Family::D:
    case Family::SpinD: {
      d.ambient = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          d.positive_roots.push_back(combine(unit_vector(n, i), unit_vector(n, j), -1));
          d.positive_roots.push_back(combine(unit_vector(n, i), unit_vector(n, j), +1));
        }
      const bool type_d = family == Family::D || family == Family::SpinD;
      if (family == Family::C)
        for (std::size_t i = 0; i < n; ++i) d.positive_roots.push_back(unit_vector(n, i, Rational(2)));
      if (family == Family::B || family == Family::SpinB)
        for (std::size_t i = 0; i < n; ++i) d.positive_roots.push_back(unit_vector(n, i));
      if (family == Family::C) {
        for (std::size_t k = 1; k <= n; ++k) d.fundamental.push_back(leading_ones(n, k));
      } else if (!type_d) {
        for (std::size_t k = 1; k < n; ++k) d.fundamental.push_back(leading_ones(n, k));
        d.fundamental.push_back(leading_ones(n, n, half));
      } else {
        for (std::size_t k = 1; k + 2 <= n; ++k) d.fundamental.push_back(leading_ones(n, k));
        auto minus = leading_ones(n, n, half);
        minus[n - 1] = -half;
        d.fundamental.push_back(minus);
        d.fundamental.push_back(leading_ones(n, n, half));
      }
      d.weyl = signed_permutations(n, type_d ? SignRule::Even : SignRule::All);
      break;
    }
    case Family::G2: {
      // inside the SU(3) torus: short roots e1, e2, -e3, long roots e_i - e_j
      d.ambient = 3;
      d.traceless = true;
      d.positive_roots = {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2, Rational(-1)),
                          combine(unit_vector(3, 0), unit_vector(3, 1), -1),
                          combine(unit_vector(3, 0), unit_vector(3, 2), -1),
                          combine(unit_vector(3, 1), unit_vector(3, 2), -1)};
      d.fundamental = {unit_vector(3, 2, Rational(-1)), combine(unit_vector(3, 0), unit_vector(3, 2), -1)};
      d.weyl = signed_permutations(3, SignRule::Global);
      break;
    }
  }
  d.rho.assign(d.ambient, Rational(0));
  for (const auto& a : d.positive_roots)
    for (std::size_t i = 0; i < d.ambient; ++i) d.rho[i] += a[i] / Rational(2);
  return d;
}

bool is_group_weight(const WeightDatum& d, const HighestWeight& lambda) {
  if (lambda.size() != d.fundamental.size()) return false;
  const std::size_t r = lambda.size();
  for (std::size_t i = 0; i < r; ++i)
    if (lambda[i] < 0 && !(d.family == Family::U && i + 1 == r)) return false;
  if (d.family == Family::B) return lambda[r - 1] % 2 == 0;
  if (d.family == Family::D) return (lambda[r - 2] + lambda[r - 1]) % 2 == 0;
  return true;
}

RationalVector weight_vector(const WeightDatum& d, const HighestWeight& lambda) {
  if (lambda.size() != d.fundamental.size())
    throw DomainError("expected " + std::to_string(d.fundamental.size()) + " weight coefficients");
  if (!is_group_weight(d, lambda)) throw DomainError("not a dominant weight of the group");
  RationalVector v(d.ambient, Rational(0));
  for (std::size_t k = 0; k < lambda.size(); ++k)
    for (std::size_t i = 0; i < d.ambient; ++i) v[i] += Rational(lambda[k]) * d.fundamental[k][i];
  return v;
}

Rational energy(const WeightDatum& d, const HighestWeight& lambda) {
  const auto shifted = combine(weight_vector(d, lambda), d.rho, +1);
  return d.inner(shifted, shifted) - d.inner(d.rho, d.rho);
}

Rational weyl_dimension(const WeightDatum& d, const HighestWeight& lambda) {
  const auto shifted = combine(weight_vector(d, lambda), d.rho, +1);
  Rational dim(1);
  for (const auto& a : d.positive_roots) dim *= d.inner(shifted, a) / d.inner(d.rho, a);
  return dim;
}

LaurentPoly weyl_character(const TorusModel& model, const WeightDatum& d, const HighestWeight& lambda) {
  if (model.family != d.family || model.rank != d.rank) throw DomainError("weight datum does not match the model");
  const auto shifted = combine(weight_vector(d, lambda), d.rho, +1);
  const long scale = common_denominator({shifted, d.rho});
  // SU and G2: the last coordinate is eliminated through the determinant relation
  const bool eliminate = model.family == Family::SU || model.family == Family::G2;
  const std::size_t width = eliminate ? d.ambient - 1 : d.ambient;

  auto alternant = [&](const RationalVector& v) {
    LaurentPoly a(width);
    for (const auto& w : d.weyl) {
      const auto image = d.apply(w, v);
      Monomial e(width);
      for (std::size_t i = 0; i < width; ++i) {
        Rational x = image[i] * Rational(scale);
        if (eliminate) x -= image[d.ambient - 1] * Rational(scale);
        e[i] = static_cast<Exponent>(x.get_num().get_si());
      }
      a.add_term(e, Rational(w.sign));
    }
    return a;
  };
  const LaurentPoly quotient = exact_divide(alternant(shifted), alternant(d.rho));

  const std::size_t holo = model.holomorphic_count();
  LaurentPoly chi(model.vars.size());
  for (const auto& [e, c] : quotient.terms()) {
    Monomial m(model.vars.size(), 0);
    const bool all_odd = std::all_of(e.begin(), e.end(), [&](Exponent x) { return x % scale != 0; });
    if (is_spin(model.family) && scale == 2 && all_odd) {
      for (std::size_t i = 0; i < width; ++i) m[i] = (e[i] - 1) / 2;
      m[holo - 1] = 1;
    } else {
      for (std::size_t i = 0; i < width; ++i) {
        if (e[i] % scale != 0) throw Error("character exponent is not a torus weight");
        m[i] = static_cast<Exponent>(e[i] / scale);
      }
    }
    chi.add_term(m, c);
  }
  return model.reduce(chi);
}

}  // namespace adq
