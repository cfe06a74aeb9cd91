#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "adq/model.hpp"
#include "adq/poisson.hpp"
#include "support.hpp"

using namespace adq;
using adq::testing::poly;

namespace {

LaurentPoly tau(int n, int j, int k) { return power_sum_multisym(n, j, k); }

BracketFn plain(std::size_t m) {
  return [s = BracketStructure::diagonal(m)](const LaurentPoly& f, const LaurentPoly& g) { return bracket(f, g, s); };
}

// Orbits of S_n on pairs of exponent vectors: sort the columns (a_i, b_i).
std::size_t brute_invariant_dimension(int n, int p, int q) {
  std::set<std::vector<std::pair<int, int>>> orbits;
  std::vector<int> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  auto fill = [&](auto&& self, std::vector<int>& v, std::size_t i, int left, auto&& done) -> void {
    if (i + 1 == v.size()) {
      v[i] = left;
      done();
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[i] = x;
      self(self, v, i + 1, left - x, done);
    }
  };
  fill(fill, a, 0, p, [&] {
    fill(fill, b, 0, q, [&] {
      std::vector<std::pair<int, int>> cols;
      for (std::size_t i = 0; i < a.size(); ++i) cols.emplace_back(a[i], b[i]);
      std::sort(cols.begin(), cols.end());
      orbits.insert(cols);
    });
  });
  return orbits.size();
}

}  // namespace

TEST_CASE("bracket examples") {
  const auto s = BracketStructure::diagonal(2);
  CHECK(bracket(tau(2, 1, 0), tau(2, 0, 1), s) == tau(2, 1, 1));
  CHECK(bracket(elementary_multisym(2, 1, 0), elementary_multisym(2, 2, 0), s).is_zero());
  CHECK(bracket(elementary_multisym(2, 0, 1), elementary_multisym(2, 0, 2), s).is_zero());
  const auto v = VariableSet::paired({"z"});
  const auto one = BracketStructure::diagonal(1);
  CHECK(bracket(poly("z", v), poly("zb", v), one) == poly("z*zb", v));
  CHECK(bracket(poly("zb", v), poly("z", v), one) == poly("-z*zb", v));
  CHECK(bracket(poly("z", v), poly("z^-1", v), one).is_zero());
  // one-variable SU(2): {Z, Zb} = tau - sigma
  CHECK(bracket(poly("z + z^-1", v), poly("zb + zb^-1", v), one) ==
        poly("z*zb + (z*zb)^-1 - z/zb - zb/z", v));

  const auto c2 = build_torus_model(Family::C, 2);
  CHECK(c2.parse("{Z1,Z1b}") == c2.parse("Z1*Z1b - 2*sig1"));
  CHECK(c2.parse("{Z1,Z2b}").is_zero());
}

TEST_CASE("bracket axioms on random inputs") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto audit = jacobi_check(plain(n), 2 * n, 40, 4, 100 + n);
    CHECK(audit.trials == 40);
    CHECK(audit.pass());
  }
  // holomorphic functions Poisson-commute
  std::mt19937_64 rng(5);
  const auto s = BracketStructure::diagonal(3);
  for (int i = 0; i < 20; ++i) {
    auto f = random_polynomial(3, 3, 4, rng).widened(6);
    auto g = random_polynomial(3, 3, 4, rng).widened(6);
    CHECK(bracket(f, g, s).is_zero());
    CHECK(bracket(conjugate(f), conjugate(g), s).is_zero());
  }
}

TEST_CASE("jacobi examples") {
  const auto v = VariableSet::paired({"z1"});
  const auto s = BracketStructure::diagonal(1);
  auto B = [&](const LaurentPoly& a, const LaurentPoly& b) { return bracket(a, b, s); };
  auto cyclic = [&](const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& h) {
    return B(f, B(g, h)) + B(g, B(h, f)) + B(h, B(f, g));
  };
  CHECK(cyclic(poly("z1", v), poly("z1b", v), poly("z1*z1b", v)).is_zero());
  const auto B2 = plain(2);
  const auto t10 = tau(2, 1, 0), t01 = tau(2, 0, 1), t11 = tau(2, 1, 1);
  CHECK((B2(t10, B2(t01, t11)) + B2(t01, B2(t11, t10)) + B2(t11, B2(t10, t01))).is_zero());
  const auto f = poly("z1^2*z1b + 3", v), g = poly("z1b^2 - z1", v);
  CHECK(cyclic(f, f, g).is_zero());
}

TEST_CASE("W-invariance is preserved by the bracket") {
  const auto m = build_torus_model(Family::U, 3);
  const auto gens = m.paired_generators();
  for (const auto& a : gens)
    for (const auto& b : gens) CHECK(is_invariant(m.poisson(a.value, b.value), m.weyl));
  const auto c2 = build_torus_model(Family::C, 2);
  CHECK(is_invariant(c2.parse("{e1,e2b}"), c2.weyl));
}

TEST_CASE("tau theorem") {
  const auto r2 = verify_tau_theorem(2, 2);
  CHECK(r2.size() == 10);
  CHECK(std::all_of(r2.begin(), r2.end(), [](const TauCheck& c) { return c.pass; }));
  const auto r3 = verify_tau_theorem(3, 3);
  bool seen = false;
  for (const auto& c : r3) {
    CHECK(c.pass);
    if (c.j1 == 2 && c.k1 == 0 && c.j2 == 0 && c.k2 == 1) {
      seen = true;
      CHECK(c.coefficient == 2);
    }
    if (c.j1 == 0 && c.k1 == 1 && c.j2 == 2 && c.k2 == 0) {
      seen = true;
      CHECK(c.coefficient == -2);
    }
  }
  CHECK(seen);
  // direct oracle for one pair: (j1 k2 - j2 k1) tau_(j1+j2, k1+k2)
  const auto s = BracketStructure::diagonal(3);
  CHECK(bracket(tau(3, 2, 0), tau(3, 0, 1), s) == Rational(2) * tau(3, 2, 1));
  CHECK(bracket(tau(3, 1, 1), tau(3, 1, 1), s).is_zero());
}

TEST_CASE("Dirac bracket") {
  for (int n : {2, 3}) {
    const auto c = determinant_constraints(n);
    const auto s = BracketStructure::diagonal(static_cast<std::size_t>(n));
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    const auto top = elementary_multisym(n, n, 0), topb = elementary_multisym(n, 0, n);
    for (int i = 0; i < 10; ++i) {
      const auto f = random_polynomial(static_cast<std::size_t>(2 * n), 3, 4, rng);
      CHECK(dirac_bracket(c.holomorphic, f, s, c).is_zero());
      CHECK(dirac_bracket(f, c.antiholomorphic, s, c).is_zero());
      const auto g = random_polynomial(static_cast<std::size_t>(2 * n), 3, 4, rng);
      CHECK(reduce_mod(dirac_bracket_lifted(f, g, s, top, topb), c.ideal) == dirac_bracket(f, g, s, c));
    }
    const auto s1 = elementary_multisym(n, 1, 0), s2 = elementary_multisym(n, 2, 0);
    CHECK(dirac_bracket(s1, s2, s, c).is_zero());
  }
}

TEST_CASE("Dirac bracket for n = 2 against a one-variable parametrization") {
  // on z1 z2 = 1 put z1 = z, z2 = 1/z; the one-variable bracket of Z = z + 1/z
  // with its conjugate is tau - sigma, the reduced Dirac bracket is half of it
  const auto m = build_torus_model(Family::SU, 2);
  const auto dirac = m.poisson(m.resolve("s1"), m.resolve("s1b"));
  const auto v = VariableSet::paired({"z"});
  const auto one = bracket(poly("z + z^-1", v), poly("zb + zb^-1", v), BracketStructure::diagonal(1));
  const auto z = LaurentPoly::variable(2, 0), zb = LaurentPoly::variable(2, 1);
  const std::vector<LaurentPoly> images{z, LaurentPoly::monomial({-1, 0}), zb, LaurentPoly::monomial({0, -1})};
  CHECK(substitute(dirac, images) * Rational(2) == one);

  const auto scaled = build_torus_model(Family::SU, 2, Rational(2));
  CHECK(substitute(scaled.poisson(scaled.resolve("s1"), scaled.resolve("s1b")), images) == one);
}

TEST_CASE("Dirac bracket axioms modulo the constraints") {
  for (int n : {2, 3}) {
    const auto m = build_torus_model(Family::SU, n);
    BracketFn b = [&](const LaurentPoly& f, const LaurentPoly& g) { return m.poisson(f, g); };
    const auto audit = jacobi_check(b, m.vars.size(), n == 2 ? 10 : 4, 2, 9, m.ideal);
    CHECK(audit.pass());
    const auto gens = m.paired_generators();
    for (const auto& a : gens)
      for (const auto& c : gens) CHECK(m.poisson(a.value, c.value) == -m.poisson(c.value, a.value));
  }
}

TEST_CASE("rewriting in generators") {
  std::vector<NamedPolynomial> taus;
  for (auto [j, k] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}})
    taus.push_back({"t(" + std::to_string(j) + "," + std::to_string(k) + ")", tau(2, j, k)});
  const auto group = build_weyl_group(Family::U, 2);

  const auto r = rewrite_in_generators(tau(2, 2, 1), taus, 4, {}, &group);
  CHECK(expand_rewrite(r, taus) == tau(2, 2, 1));

  const auto sigma = rewrite_in_generators(elementary_multisym(2, 1, 1), taus, 4);
  CHECK(sigma.expression == poly("t(1,0)*t(0,1) - t(1,1)", sigma.names));

  std::vector<NamedPolynomial> only{{"s1", elementary_multisym(2, 1, 0)}};
  const auto trivial = rewrite_in_generators(elementary_multisym(2, 1, 0), only, 2);
  CHECK(trivial.expression == poly("s1", trivial.names));

  CHECK_THROWS_AS(rewrite_in_generators(LaurentPoly::variable(4, 0), taus, 4, {}, &group), NotInvariant);
  try {
    rewrite_in_generators(elementary_multisym(2, 2, 0), only, 4);
    FAIL("expected NoRepresentationWithinCap");
  } catch (const NoRepresentationWithinCap& e) {
    CHECK_FALSE(e.residual().is_zero());
  }

  // round trip on random invariants built from the generators
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> pick(0, 4), coef(-3, 3);
  for (int i = 0; i < 15; ++i) {
    LaurentPoly p = LaurentPoly::constant(4, Rational(coef(rng)));
    for (int t = 0; t < 3; ++t) p += Rational(coef(rng)) * taus[static_cast<std::size_t>(pick(rng))].value *
                                      taus[static_cast<std::size_t>(pick(rng))].value;
    const auto rw = rewrite_in_generators(p, taus, 4, {}, &group);
    CHECK(expand_rewrite(rw, taus) == p);
  }
}

TEST_CASE("invariant dimensions match orbit counting") {
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4 - p; ++q) {
        INFO("n=" << n << " p=" << p << " q=" << q);
        CHECK(invariant_dimension(n, p, q) == brute_invariant_dimension(n, p, q));
      }
}

TEST_CASE("Poisson generation closure") {
  const auto s1 = elementary_multisym(2, 1, 0), s2 = elementary_multisym(2, 2, 0);
  const auto full = poisson_generation_closure(2, {s1, s2, conjugate(s1), conjugate(s2)}, plain(2), 4);
  CHECK(full.complete());
  for (const auto& row : full.rows) CHECK(row.full == brute_invariant_dimension(2, row.holomorphic_degree, row.antiholomorphic_degree));

  const auto partial = poisson_generation_closure(2, {s1, conjugate(s1)}, plain(2), 2);
  CHECK_FALSE(partial.complete());
  bool missing = false;
  for (const auto& row : partial.rows)
    if (row.holomorphic_degree == 2 && row.antiholomorphic_degree == 0) missing = row.reached < row.full;
  CHECK(missing);

  const auto constants = poisson_generation_closure(2, {LaurentPoly::constant(4, Rational(1))}, plain(2), 2);
  for (const auto& row : constants.rows)
    CHECK(row.reached == ((row.holomorphic_degree + row.antiholomorphic_degree == 0) ? 1u : 0u));
}
