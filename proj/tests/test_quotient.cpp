#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <random>

#include "adq/hilbert.hpp"
#include "adq/model.hpp"
#include "adq/relations.hpp"
#include "adq/strata.hpp"
#include "support.hpp"

using namespace adq;
using adq::testing::paired_point;
using adq::testing::poly;
using adq::testing::random_torus;

namespace {

const Complex kEta = std::polar(1.0, 2 * std::numbers::pi / 3);

Complex root_discriminant(const std::vector<Complex>& r) {
  Complex d = 1.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) d *= (r[i] - r[j]) * (r[i] - r[j]);
  return d;
}

// Gram entries from a central-difference Jacobian; each paired slot is moved on its own.
Eigen::MatrixXcd numeric_gram(const HilbertMap& h, const std::vector<Complex>& z) {
  const auto base = paired_point(z);
  const double step = 1e-5;
  const auto d = static_cast<Eigen::Index>(h.dimension());
  Eigen::MatrixXcd jac(d, static_cast<Eigen::Index>(base.size()));
  for (std::size_t c = 0; c < base.size(); ++c) {
    auto up = base, down = base;
    up[c] += step;
    down[c] -= step;
    for (Eigen::Index a = 0; a < d; ++a) {
      const auto& f = h.components[static_cast<std::size_t>(a)].value;
      jac(a, static_cast<Eigen::Index>(c)) = (evaluate(f, up) - evaluate(f, down)) / (2 * step);
    }
  }
  return jac * jac.adjoint();
}

}  // namespace

TEST_CASE("torus models") {
  const auto su3 = build_torus_model(Family::SU, 3);
  CHECK(su3.vars.size() == 6);
  CHECK(su3.constraint.has_value());
  CHECK(su3.reduce(su3.parse("z1*z2*z3")) == su3.parse("1"));
  const auto u3 = build_torus_model(Family::U, 3);
  CHECK(u3.top_invertible);
  CHECK(u3.resolve("s(2,1)") == elementary_multisym(3, 2, 1));
  CHECK(u3.resolve("t(3,0)") == power_sum_multisym(3, 3, 0));
  CHECK_THROWS_AS(u3.resolve("q7"), UnknownGenerator);
  const auto sb = build_torus_model(Family::SpinB, 2);
  CHECK(sb.reduce(sb.parse("z^2")) == sb.parse("z1*z2"));
  CHECK_THROWS_AS(build_torus_model(Family::G2, 3), UnsupportedFamily);
}

TEST_CASE("discriminants") {
  const auto sy = VariableSet::symbols({"a", "b", "c"});
  std::vector<LaurentPoly> quad{poly("a", sy), poly("b", sy), poly("c", sy)};
  CHECK(discriminant(quad) == poly("b^2 - 4*a*c", sy));

  std::mt19937_64 rng(4);
  std::normal_distribution<double> nd;
  for (int n = 2; n <= 5; ++n) {
    std::vector<Complex> roots;
    for (int i = 0; i < n; ++i) roots.emplace_back(nd(rng), nd(rng));
    std::vector<Complex> coeffs{1.0};
    const auto e = elementary_values(roots);
    for (int k = 0; k < n; ++k) coeffs.push_back((k % 2 == 0 ? -1.0 : 1.0) * e[static_cast<std::size_t>(k)]);
    const Complex expected = root_discriminant(roots);
    CHECK(std::abs(discriminant(coeffs) - expected) <= 1e-9 * (1 + std::abs(expected)));
  }

  // the SU(3) bottom point (3, 3) has a triple root
  std::vector<Complex> bottom{1.0, -3.0, 3.0, -1.0};
  CHECK(std::abs(discriminant(bottom)) < 1e-12);
}

TEST_CASE("symmetric functions in elementary form") {
  const auto v = VariableSet::paired({"z1", "z2", "z3"});
  const auto e = VariableSet::symbols({"e1", "e2", "e3"});
  CHECK(symmetric_to_elementary(power_sum_multisym(3, 2, 0), 3) == poly("e1^2 - 2*e2", e));
  CHECK(symmetric_to_elementary(poly("z1^2*z2 + z1^2*z3 + z2^2*z1 + z2^2*z3 + z3^2*z1 + z3^2*z2", v), 3) ==
        poly("e1*e2 - 3*e3", e));
}

TEST_CASE("relation catalog") {
  for (const std::string tag : {"u2-quartic", "u2-tau-mixed", "u2-tau-holomorphic", "u2-real", "su2-cubic", "su2-real",
                                "su2-bracket", "su2-real-bracket"}) {
    INFO(tag);
    const auto rel = find_relation(tag);
    REQUIRE(rel.has_value());
    const auto model = build_torus_model(rel->family, rel->rank);
    CHECK(verify_relation(model, *rel).pass);
  }
  CHECK_FALSE(find_relation("no-such-tag").has_value());
  const auto u3 = build_torus_model(Family::U, 3);
  CHECK_THROWS_AS(verify_relation(u3, *find_relation("u2-quartic")), DomainError);
}

TEST_CASE("family identities") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::C, 3}, {Family::B, 2}, {Family::D, 3}, {Family::D, 4},
                                                          {Family::SpinB, 4}, {Family::SpinD, 3}, {Family::SpinD, 4}}) {
    const auto m = build_torus_model(f, n);
    for (const auto& r : model_relations(m)) {
      INFO(to_string(f) << n << " " << r.tag);
      CHECK(verify_relation(m, r).pass);
    }
  }
}

TEST_CASE("derived relations") {
  for (auto [n, r, s] : std::vector<std::tuple<int, int, int>>{{2, 0, 2}, {3, 0, 2}, {3, 1, 2}}) {
    const auto d = derive_relation(n, r, s);
    CHECK(d.check.pass);
    // beta is the discriminant of w^n - s1 w^(n-1) + ...: compare at a sample point
    std::vector<Complex> roots{{0.3, 1.0}, {-1.1, 0.2}, {0.7, -0.4}};
    roots.resize(static_cast<std::size_t>(n));
    const auto e = elementary_values(roots);
    std::vector<Complex> at(d.names.size(), 0.0);
    for (int k = 0; k < n; ++k) at[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)];
    const Complex expected = root_discriminant(roots);
    CHECK(std::abs(evaluate(d.beta, at) - expected) <= 1e-9 * (1 + std::abs(expected)));
  }
}

TEST_CASE("Hilbert map and Gram matrix") {
  const auto h = unitary_hilbert_map(2);
  CHECK(h.dimension() == 5);
  CHECK(h.components[4].name == "t(1,1)");
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    const auto z = random_torus(2, rng);
    const Eigen::MatrixXcd g = gram_matrix(h, z);
    CHECK((g - numeric_gram(h, z)).norm() <= 1e-6 * (1 + g.norm()));
    CHECK((g - g.adjoint()).norm() <= 1e-12 * (1 + g.norm()));
  }
  const auto su3 = build_torus_model(Family::SU, 3);
  const auto hs = hilbert_map(su3);
  const auto z = std::vector<Complex>{{0.5, 0.4}, {1.2, -0.3}, 0.0};
  auto zz = z;
  zz[2] = 1.0 / (z[0] * z[1]);
  CHECK((gram_matrix(hs, zz) - numeric_gram(hs, zz)).norm() <= 1e-6 * (1 + gram_matrix(hs, zz).norm()));
  CHECK_THROWS_AS(h.evaluate(std::vector<Complex>{0.0, 1.0}), PoleAtPoint);
}

TEST_CASE("Gram entries in components") {
  const auto h = unitary_hilbert_map(2);
  const auto sym = symbolic_gram(h);
  const auto comp = gram_in_components(h, 4);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) CHECK(expand_rewrite(comp[a][b], h.components) == sym[a][b]);
  CHECK(comp[0][0].expression == poly("2", comp[0][0].names));
  CHECK(comp[1][1].expression == poly("t(1,1)", comp[1][1].names));
}

TEST_CASE("determinant") {
  const auto sy = VariableSet::symbols({"a", "b", "c", "d"});
  PolyMatrix m{{poly("a", sy), poly("b", sy)}, {poly("c", sy), poly("d", sy)}};
  CHECK(determinant(m) == poly("a*d - b*c", sy));
  PolyMatrix m3{{poly("a", sy), poly("1", sy), poly("0", sy)},
                {poly("0", sy), poly("b", sy), poly("1", sy)},
                {poly("1", sy), poly("0", sy), poly("c", sy)}};
  CHECK(determinant(m3) == poly("a*b*c + 1", sy));
  // the U(2) Gram matrix is singular on the torus
  CHECK(determinant(symbolic_gram(unitary_hilbert_map(2))).is_zero());
}

TEST_CASE("semialgebraic membership") {
  const auto u = unitary_membership_model();
  const auto h = unitary_hilbert_map(2);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto r = psd_membership(u, h.evaluate(random_torus(2, rng)));
    CHECK(r.member);
    CHECK(r.relation_residual < 1e-10);
  }
  // (X, 0, b) lies on the SU(2) variety when X^2 = 2(b + 1)
  const auto c = canoe_membership_model();
  const auto outside = psd_membership(c, canoe_candidate(std::sqrt(3.0), 0, 0.5));
  CHECK_FALSE(outside.member);
  CHECK(outside.min_eigenvalue < -1);
  CHECK(psd_membership(c, canoe_candidate(2.0, 0, 1.0)).member);
  CHECK(psd_membership(c, canoe_candidate(std::sqrt(5.0), 0, 1.5)).member);
  CHECK_THROWS_AS(psd_membership(c, canoe_candidate(1.0, 0, 2.0)), RelationViolation);
  // images of torus points are members
  const auto hc = canoe_hilbert_map();
  for (int i = 0; i < 10; ++i) {
    const Complex z = random_torus(1, rng)[0];
    CHECK(psd_membership(c, hc.evaluate(std::vector<Complex>{z, 1.0 / z})).member);
  }
}

TEST_CASE("partitions and closure") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  CHECK(partitions(3).front() == Partition{1, 1, 1});
  CHECK(partitions(3).back() == Partition{3});
  CHECK(is_coarsening({1, 1, 1}, {2, 1}));
  CHECK(is_coarsening({2, 1, 1}, {2, 2}));
  CHECK_FALSE(is_coarsening({2, 2}, {3, 1}));
  CHECK_FALSE(is_coarsening({2, 1}, {1, 1, 1}));
  const auto s = make_stratum(Family::SU, {1, 1, 1});
  CHECK(s.dimension == 2);
  CHECK(s.closure.size() == 2);
  CHECK(make_stratum(Family::U, {2, 1}).dimension == 2);
}

TEST_CASE("stratum classification") {
  CHECK(classify_stratum(Family::SU, std::vector<Complex>{3.0, 3.0, 1.0}).partition == Partition{3});
  CHECK(classify_stratum(Family::U, std::vector<Complex>{4.0, 5.0, 2.0}).partition == Partition{2, 1});
  const auto bottom = elementary_values(std::vector<Complex>{kEta, kEta, kEta});
  CHECK(classify_stratum(Family::SU, bottom).partition == Partition{3});
  CHECK(std::abs(bottom[0] - 3.0 * kEta) < 1e-12);
  CHECK(std::abs(bottom[1] - 3.0 * kEta * kEta) < 1e-12);
  CHECK_THROWS_AS(classify_stratum(Family::SU, std::vector<Complex>{1.0, 1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(classify_stratum(Family::U, std::vector<Complex>{1.0, 0.0}), DomainError);

  // a root gap a few times the merge threshold is flagged
  const double gap = 5e-6 * 3.0;
  const auto near = elementary_values(std::vector<Complex>{1.0, 1.0 + gap, -1.0});
  const auto s = classify_stratum(Family::U, near);
  CHECK(s.partition == Partition{1, 1, 1});
  CHECK(s.ambiguous);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : partitions(n)) {
      std::vector<Complex> v;
      for (std::size_t i = 0; i < p.size(); ++i) v.emplace_back(u(rng), u(rng));
      const auto z = stratum_point(Family::U, p, v);
      INFO("n=" << n);
      CHECK(classify_stratum(Family::U, elementary_values(z)).partition == p);
    }
}

TEST_CASE("Poisson rank by stratum") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n = 2; n <= 3; ++n) {
    const auto bm = bracket_matrix(build_torus_model(Family::U, n));
    for (const auto& p : partitions(n)) {
      std::vector<Complex> v;
      for (std::size_t i = 0; i < p.size(); ++i) v.emplace_back(u(rng), u(rng));
      CHECK(poisson_rank_at(bm, stratum_point(Family::U, p, v)) == 2 * static_cast<int>(p.size()));
    }
  }
  const auto su3 = bracket_matrix(build_torus_model(Family::SU, 3));
  const Complex y(0.7, 0.4), w(-0.2, 1.1);
  CHECK(poisson_rank_at(su3, stratum_point(Family::SU, {1, 1, 1}, std::vector<Complex>{y, w})) == 4);
  CHECK(poisson_rank_at(su3, stratum_point(Family::SU, {2, 1}, std::vector<Complex>{y})) == 2);
  CHECK(poisson_rank_at(su3, stratum_point(Family::SU, {3}, std::vector<Complex>{kEta})) == 0);
}

TEST_CASE("SU(2) canoe") {
  const auto one = su2_canoe(1.0);
  CHECK(one.x == doctest::Approx(2.0));
  CHECK(one.y == doctest::Approx(0.0));
  CHECK(one.b == doctest::Approx(1.0));
  CHECK(std::abs(one.bracket_value) < 1e-12);
  const auto minus = su2_canoe(-1.0);
  CHECK(minus.x == doctest::Approx(-2.0));
  CHECK(minus.b == doctest::Approx(1.0));
  CHECK(std::abs(minus.bracket_value) < 1e-12);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Complex z = random_torus(1, rng, 1.0)[0];
    const auto r = su2_canoe(z);
    CHECK(r.relation_residual < 1e-10);
    // Z = z + 1/z, so the reduced potential is log^2 |z|
    const double l = std::log(std::abs(z));
    CHECK(r.kappa_reduced == doctest::Approx(l * l).epsilon(1e-9));
    const Complex Z = z + 1.0 / z;
    CHECK(r.x == doctest::Approx(Z.real()));
    CHECK(r.y == doctest::Approx(Z.imag()));
  }
  CHECK(kappa_reduced(2.0) == 0.0);
  CHECK(kappa_reduced(-2.0) == 0.0);
}

TEST_CASE("Kaehler potential on the torus") {
  const auto u1 = build_torus_model(Family::U, 1);
  CHECK(kappa_eval(u1, std::vector<Complex>{std::numbers::e}) == doctest::Approx(1.0));
  const auto u3 = build_torus_model(Family::U, 3);
  CHECK(kappa_eval(u3, std::vector<Complex>{kEta, -1.0, Complex(0, 1)}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(kappa_eval(u3, std::vector<Complex>{0.0, 1.0, 1.0}), PoleAtPoint);
  // Weyl invariance for C2: inversions and swaps keep sum log^2 |z_j|
  const auto c2 = build_torus_model(Family::C, 2);
  const std::vector<Complex> z{{1.3, 0.4}, {0.2, -0.7}};
  const double k = kappa_eval(c2, z);
  CHECK(kappa_eval(c2, std::vector<Complex>{1.0 / z[1], z[0]}) == doctest::Approx(k));
  CHECK(kappa_eval(c2, std::vector<Complex>{1.0 / z[0], 1.0 / z[1]}) == doctest::Approx(k));
}

TEST_CASE("real boundary of SU(3)") {
  const auto p0 = real_boundary_su3(0.0);
  CHECK(p0[0] == doctest::Approx(3.0));
  CHECK(p0[1] == doctest::Approx(0.0));
  for (double a = 0.1; a < 6.3; a += 0.37) {
    const auto p = real_boundary_su3(a);
    const Complex w(p[0], p[1]);
    // a compact torus point with a double root: s2 = conj(s1) and zero discriminant
    std::vector<Complex> coeffs{1.0, -w, std::conj(w), -1.0};
    CHECK(std::abs(discriminant(coeffs)) < 1e-9);
  }
}

TEST_CASE("spin bracket split") {
  const auto m2 = build_torus_model(Family::SpinB, 2);
  const auto split = spin_bracket_split(m2);
  CHECK(split.invariant);
  CHECK(split.a == m2.reduce(m2.parse("(z + z^-1)*(zb + zb^-1) + (z/z1 + z/z2)*(zb/z1b + zb/z2b)")));
  CHECK(m2.reduce(m2.resolve("delta") * m2.resolve("deltab")) == m2.reduce(split.a + split.b));
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::SpinB, 1}, {Family::SpinB, 3}, {Family::SpinD, 3}}) {
    INFO(to_string(f) << n);
    CHECK(spin_bracket_split(build_torus_model(f, n)).invariant);
  }
  const auto m1 = build_torus_model(Family::SpinB, 1);
  const auto s1 = spin_bracket_split(m1);
  // C_zz = 1/2 here, so B = (1 - C_zz)(z - 1/z)(zb - 1/zb) by direct expansion
  CHECK(s1.b == m1.reduce(m1.parse("(z - z^-1)*(zb - zb^-1)/2")));
  CHECK_THROWS_AS(spin_bracket_split(build_torus_model(Family::C, 2)), UnsupportedFamily);
}
