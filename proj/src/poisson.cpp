#include "adq/poisson.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "adq/echelon.hpp"

namespace adq {

BracketStructure BracketStructure::diagonal(std::size_t m, const Rational& c) {
  BracketStructure s;
  s.coefficients.assign(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) s.coefficients[i][i] = c;
  return s;
}

LaurentPoly bracket(const LaurentPoly& f, const LaurentPoly& g, const BracketStructure& s) {
  const std::size_t m = s.holomorphic_count();
  const std::size_t width = std::max(f.nvars(), g.nvars());
  if (f.is_zero() || g.is_zero()) return LaurentPoly(width);
  if (width != 2 * m) throw DomainError("bracket structure does not match the variable count");
  const LaurentPoly F = f.nvars() == width ? f : f.widened(width);
  const LaurentPoly G = g.nvars() == width ? g : g.widened(width);

  std::vector<LaurentPoly> holo_f(m), anti_f(m), holo_g(m), anti_g(m);
  for (std::size_t u = 0; u < m; ++u) {
    holo_f[u] = log_derivative(F, u);
    anti_f[u] = log_derivative(F, u + m);
    holo_g[u] = log_derivative(G, u);
    anti_g[u] = log_derivative(G, u + m);
  }
  // sum_{u,v} C_uv [ (z_u d_u f)(zb_v d_vb g) - (zb_v d_vb f)(z_u d_u g) ]
  LaurentPoly out(width);
  for (std::size_t u = 0; u < m; ++u) {
    LaurentPoly weighted_anti_g(width), weighted_anti_f(width);
    for (std::size_t v = 0; v < m; ++v) {
      const Rational& c = s.coefficients[u][v];
      if (c == 0) continue;
      weighted_anti_g += c * anti_g[v];
      weighted_anti_f += c * anti_f[v];
    }
    if (!holo_f[u].is_zero()) out += holo_f[u] * weighted_anti_g;
    if (!holo_g[u].is_zero()) out -= weighted_anti_f * holo_g[u];
  }
  if (s.scale != 1) out *= s.scale;
  return out;
}

ConstraintPair determinant_constraints(int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  Monomial top(2 * m, 0), top_bar(2 * m, 0);
  std::vector<std::size_t> holo, anti;
  for (std::size_t i = 0; i < m; ++i) {
    top[i] = 1;
    top_bar[i + m] = 1;
    holo.push_back(i);
    anti.push_back(i + m);
  }
  ConstraintPair c;
  c.holomorphic = LaurentPoly::monomial(top) - LaurentPoly::constant(2 * m, Rational(1));
  c.antiholomorphic = LaurentPoly::monomial(top_bar) - LaurentPoly::constant(2 * m, Rational(1));
  c.ideal = QuotientIdeal(2 * m);
  c.ideal.add(ProductRule{holo, Rational(1)});
  c.ideal.add(ProductRule{anti, Rational(1)});
  return c;
}

LaurentPoly dirac_bracket(const LaurentPoly& f, const LaurentPoly& g, const BracketStructure& s,
                          const ConstraintPair& c) {
  const auto& I = c.ideal;
  const LaurentPoly& h = c.holomorphic;
  const LaurentPoly& a = c.antiholomorphic;
  auto constant_of = [&](const LaurentPoly& p) {
    auto v = reduce_mod(p, I).constant_value();
    if (!v || *v == 0) throw ConstraintDegenerate("constraint bracket does not reduce to a nonzero constant");
    return *v;
  };
  const Rational ha = constant_of(bracket(h, a, s));
  const Rational ah = constant_of(bracket(a, h, s));
  LaurentPoly out = reduce_mod(bracket(f, g, s), I);
  out -= reduce_mod(reduce_mod(bracket(f, a, s), I) * reduce_mod(bracket(h, g, s), I), I) / ha;
  out -= reduce_mod(reduce_mod(bracket(f, h, s), I) * reduce_mod(bracket(a, g, s), I), I) / ah;
  return out;
}

LaurentPoly dirac_bracket_lifted(const LaurentPoly& f, const LaurentPoly& g,
                                 const BracketStructure& s, const LaurentPoly& top,
                                 const LaurentPoly& top_conjugate) {
  LaurentPoly out = bracket(f, g, s);
  const LaurentPoly d1 = bracket(top, top_conjugate, s);
  const LaurentPoly d2 = bracket(top_conjugate, top, s);
  if (d1.is_zero() || d2.is_zero()) throw ConstraintDegenerate("constraint bracket vanishes");
  const LaurentPoly n1 = bracket(f, top_conjugate, s) * bracket(top, g, s);
  const LaurentPoly n2 = bracket(f, top, s) * bracket(top_conjugate, g, s);
  if (!n1.is_zero()) out -= exact_divide(n1, d1);
  if (!n2.is_zero()) out -= exact_divide(n2, d2);
  return out;
}

std::vector<TauCheck> verify_tau_theorem(int n, int cap) {
  if (n < 1 || cap < 1) throw DomainError("tau sweep needs n >= 1 and cap >= 1");
  const auto s = BracketStructure::diagonal(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> idx;
  for (int d = 1; d <= cap; ++d)
    for (int j = d; j >= 0; --j) idx.emplace_back(j, d - j);
  std::vector<TauCheck> out;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const auto [j1, k1] = idx[a];
      const auto [j2, k2] = idx[b];
      const int coef = j1 * k2 - j2 * k1;
      LaurentPoly lhs = bracket(power_sum_multisym(n, j1, k1), power_sum_multisym(n, j2, k2), s);
      LaurentPoly rhs = coef == 0 ? LaurentPoly(2 * static_cast<std::size_t>(n))
                                  : Rational(coef) * power_sum_multisym(n, j1 + j2, k1 + k2);
      LaurentPoly residual = lhs - rhs;
      out.push_back({j1, k1, j2, k2, coef, residual.is_zero(), residual});
    }
  return out;
}

// ---------------------------------------------------------------- rewriting

namespace {

void enumerate_exponents(const std::vector<int>& weights, int cap, std::size_t i,
                         std::vector<int>& cur, int used, std::vector<std::vector<int>>& out) {
  if (i == weights.size()) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; used + e * weights[i] <= cap; ++e) {
    cur[i] = e;
    enumerate_exponents(weights, cap, i + 1, cur, used + e * weights[i], out);
  }
  cur[i] = 0;
}

}  // namespace

Rewrite rewrite_in_generators(const LaurentPoly& p, const std::vector<NamedPolynomial>& gens,
                              int degree_cap, const QuotientIdeal& ideal,
                              const FiniteGroup* group) {
  if (group && !is_invariant(p, *group)) throw NotInvariant("expression is not invariant");
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name);
  Rewrite result{VariableSet::symbols(names), LaurentPoly(gens.size())};

  const LaurentPoly target = reduce_mod(p, ideal);
  if (target.is_zero()) return result;
  const std::size_t width = target.nvars();

  std::vector<int> weights;
  for (const auto& g : gens) weights.push_back(std::max(1, g.value.total_degree()));
  std::vector<std::vector<int>> columns;
  std::vector<int> cur(gens.size(), 0);
  enumerate_exponents(weights, degree_cap, 0, cur, 0, columns);
  auto weighted = [&](const std::vector<int>& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
    return d;
  };
  std::stable_sort(columns.begin(), columns.end(), [&](const auto& a, const auto& b) {
    const int da = weighted(a), db = weighted(b);
    if (da != db) return da < db;
    return a > b;
  });

  std::map<std::vector<int>, LaurentPoly> value;
  PolyEchelon basis;
  std::size_t i = 0;
  while (i < columns.size()) {
    const int level = weighted(columns[i]);
    for (; i < columns.size() && weighted(columns[i]) == level; ++i) {
      const auto& e = columns[i];
      LaurentPoly v;
      auto first = std::find_if(e.begin(), e.end(), [](int x) { return x != 0; });
      if (first == e.end()) {
        v = LaurentPoly::constant(width, Rational(1));
      } else {
        const std::size_t k = static_cast<std::size_t>(first - e.begin());
        auto prev = e;
        --prev[k];
        const LaurentPoly& base = value.at(prev);
        LaurentPoly gk = gens[k].value.nvars() == width ? gens[k].value : gens[k].value.widened(width);
        v = reduce_mod(base * gk, ideal);
      }
      Monomial tag_exp(e.begin(), e.end());
      basis.insert(v, LaurentPoly::monomial(tag_exp));
      value.emplace(e, std::move(v));
    }
    auto [residual, tag] = basis.reduce(target, LaurentPoly(gens.size()));
    if (residual.is_zero()) {
      result.expression = -tag;
      return result;
    }
  }
  auto residual = basis.reduce(target, LaurentPoly(gens.size())).first;
  throw NoRepresentationWithinCap("no representation within degree cap " + std::to_string(degree_cap),
                                  residual);
}

LaurentPoly expand_rewrite(const Rewrite& r, const std::vector<NamedPolynomial>& gens,
                           const QuotientIdeal& ideal) {
  std::vector<LaurentPoly> images;
  std::size_t width = 0;
  for (const auto& g : gens) width = std::max(width, g.value.nvars());
  for (const auto& g : gens) images.push_back(g.value.nvars() == width ? g.value : g.value.widened(width));
  if (r.expression.is_zero()) return LaurentPoly(width);
  return reduce_mod(substitute(r.expression, images), ideal);
}

// ---------------------------------------------------------------- closure

bool ClosureReport::complete() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClosureRow& r) { return r.reached == r.full; });
}

namespace {

// Non-increasing sequences of n exponent pairs with the given sums: one per orbit.
std::size_t count_pair_multisets(int slots, int p, int q, std::pair<int, int> bound) {
  if (slots == 0) return (p == 0 && q == 0) ? 1 : 0;
  std::size_t total = 0;
  for (int a = std::min(p, bound.first); a >= 0; --a)
    for (int b = q; b >= 0; --b) {
      if (std::make_pair(a, b) > bound) continue;
      total += count_pair_multisets(slots - 1, p - a, q - b, {a, b});
    }
  return total;
}

std::pair<int, int> bidegree(const LaurentPoly& p, std::size_t m) {
  std::optional<std::pair<int, int>> d;
  for (const auto& [e, c] : p.terms()) {
    int a = 0, b = 0;
    for (std::size_t i = 0; i < m; ++i) {
      a += e[i];
      b += e[i + m];
    }
    if (d && *d != std::make_pair(a, b)) throw DomainError("closure seeds must be bihomogeneous");
    d = std::make_pair(a, b);
  }
  return d.value_or(std::make_pair(0, 0));
}

}  // namespace

std::size_t invariant_dimension(int n, int p, int q) {
  if (p < 0 || q < 0) return 0;
  return count_pair_multisets(n, p, q, {p, q});
}

ClosureReport poisson_generation_closure(int n, const std::vector<LaurentPoly>& seeds,
                                         const BracketFn& br, int cap) {
  const std::size_t m = static_cast<std::size_t>(n);
  using Key = std::pair<int, int>;
  std::map<Key, std::vector<LaurentPoly>> seed_by_degree;
  for (const auto& s : seeds) {
    if (s.is_zero()) continue;
    const Key k = bidegree(s, m);
    if (k.first + k.second == 0) continue;
    seed_by_degree[k].push_back(s);
  }
  std::map<Key, PolyEchelon> lie, alg;
  auto rows_of = [](const PolyEchelon& e) {
    std::vector<LaurentPoly> out;
    for (const auto& [k, r] : e.rows()) out.push_back(r.value);
    return out;
  };

  ClosureReport report;
  report.rows.push_back({0, 0, 1, 1});
  for (int d = 1; d <= cap; ++d) {
    for (int p = d; p >= 0; --p) {
      const int q = d - p;
      const Key key{p, q};
      const std::size_t full = invariant_dimension(n, p, q);
      PolyEchelon& L = lie[key];
      PolyEchelon& A = alg[key];
      for (const auto& s : seed_by_degree[key]) L.insert(s);
      // Brackets of lower Lie pieces whose bidegrees add up to (p, q).
      for (int a = 0; a <= p && L.rank() < full; ++a)
        for (int b = 0; b <= q && L.rank() < full; ++b) {
          const Key k1{a, b}, k2{p - a, q - b};
          if (a + b == 0 || a + b == d || k1 > k2) continue;
          auto x = rows_of(lie[k1]);
          auto y = rows_of(lie[k2]);
          for (std::size_t i = 0; i < x.size() && L.rank() < full; ++i)
            for (std::size_t j = (k1 == k2 ? i + 1 : 0); j < y.size() && L.rank() < full; ++j)
              L.insert(br(x[i], y[j]));
        }
      for (const auto& r : rows_of(L)) A.insert(r);
      for (int a = 0; a <= p && A.rank() < full; ++a)
        for (int b = 0; b <= q && A.rank() < full; ++b) {
          const Key k1{a, b}, k2{p - a, q - b};
          if (a + b == 0 || a + b == d) continue;
          auto x = rows_of(lie[k1]);
          auto y = rows_of(alg[k2]);
          for (std::size_t i = 0; i < x.size() && A.rank() < full; ++i)
            for (std::size_t j = 0; j < y.size() && A.rank() < full; ++j) A.insert(x[i] * y[j]);
        }
      report.rows.push_back({p, q, A.rank(), full});
    }
  }
  return report;
}

// ---------------------------------------------------------------- audit

LaurentPoly random_polynomial(std::size_t nvars, int max_degree, int max_terms,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, std::max(1, max_terms));
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  LaurentPoly p(nvars);
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial e(nvars, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    Rational q(c, den(rng));
    q.canonicalize();
    p.add_term(e, q);
  }
  return p;
}

BracketAudit jacobi_check(const BracketFn& br, std::size_t nvars, int trials, int max_degree,
                          std::uint64_t seed, const QuotientIdeal& ideal) {
  std::mt19937_64 rng(seed);
  auto vanishes = [&](const LaurentPoly& p) { return reduce_mod(p, ideal).is_zero(); };
  BracketAudit audit;
  for (int t = 0; t < trials; ++t) {
    const LaurentPoly f = random_polynomial(nvars, max_degree, 3, rng);
    const LaurentPoly g = random_polynomial(nvars, max_degree, 3, rng);
    const LaurentPoly h = random_polynomial(nvars, max_degree, 3, rng);
    ++audit.trials;
    const LaurentPoly fg = br(f, g);
    if (!vanishes(fg + br(g, f))) ++audit.antisymmetry_failures;
    if (!vanishes(br(f, g * h) - fg * h - g * br(f, h))) ++audit.leibniz_failures;
    if (!vanishes(br(f, br(g, h)) + br(g, br(h, f)) + br(h, fg))) ++audit.jacobi_failures;
  }
  return audit;
}

}  // namespace adq
