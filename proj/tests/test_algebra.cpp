#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "adq/echelon.hpp"
#include "adq/expr.hpp"
#include "adq/laurent.hpp"
#include "adq/rational.hpp"
#include "support.hpp"

using namespace adq;
using adq::testing::poly;

TEST_CASE("rationals parse, print and stay canonical") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+2/8") == Rational(1, 4));
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_display(Rational(2)) == "2");
  CHECK(to_display(Rational(-6, 8)) == "-3/4");  // canonicalized on output
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(power(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(power(Rational(0), -1), DomainError);
  // 2^200 / 2^199 stays exact
  Rational big = power(Rational(2), 200) / power(Rational(2), 199);
  CHECK(big == Rational(2));
}

TEST_CASE("grlex order puts larger signed degree first") {
  GrlexGreater gt;
  CHECK(gt({2, 0}, {1, 0}));
  CHECK(gt({1, 1}, {0, 1}));
  CHECK(gt({2, 0}, {1, 1}));   // same degree, lexicographically larger
  CHECK_FALSE(gt({1, 1}, {2, 0}));
  CHECK(gt({0, 0}, {-1, 0}));
  CHECK_FALSE(gt({1, 0}, {1, 0}));
}

TEST_CASE("Laurent arithmetic") {
  const auto v = VariableSet::paired({"z1", "z2"});
  const auto a = poly("z1 + z2^-1", v);
  const auto b = poly("z1 - z2^-1", v);
  CHECK(a * b == poly("z1^2 - z2^-2", v));
  CHECK(a + b == poly("2*z1", v));
  CHECK((a - a).is_zero());
  CHECK(a.pow(2) == poly("z1^2 + 2*z1*z2^-1 + z2^-2", v));
  CHECK(poly("z1*z1^-1", v) == LaurentPoly::constant(4, Rational(1)));
  CHECK(poly("(z1 + 1)/2", v).coefficient({0, 0, 0, 0}) == Rational(1, 2));
  CHECK(a.total_degree() == 1);
  CHECK(poly("z1^2*z2^-3 + 1", v).total_degree() == 5);
  CHECK(a.exponent_range(1) == std::pair<Exponent, Exponent>{-1, 0});
  CHECK(to_string(poly("3*z1^2*z2b - 1/3", v), v) == "3*z1^2*z2b - 1/3");
  CHECK(poly("0", v).constant_value() == Rational(0));
  CHECK_FALSE(a.constant_value().has_value());
}

TEST_CASE("exponent cap is enforced") {
  const auto v = VariableSet::symbols({"x"});
  CHECK_NOTHROW(LaurentPoly::variable(1, 0, 64));
  CHECK_THROWS_AS(LaurentPoly::variable(1, 0, 65), ExponentOverflow);
  const auto x40 = LaurentPoly::variable(1, 0, 40);
  CHECK_THROWS_AS(x40 * x40, ExponentOverflow);
  CHECK_THROWS_AS(poly("x^-70", v), ExponentOverflow);
}

TEST_CASE("derivatives, substitution and conjugation") {
  const auto v = VariableSet::paired({"z1", "z2"});
  const auto p = poly("z1^3*z2b - 2*z1^-1", v);
  CHECK(partial_derivative(p, 0) == poly("3*z1^2*z2b + 2*z1^-2", v));
  CHECK(log_derivative(p, 0) == poly("3*z1^3*z2b + 2*z1^-1", v));
  CHECK(conjugate(p) == poly("z1b^3*z2 - 2*z1b^-1", v));
  // swap z1 and z2 together with their conjugates
  std::vector<LaurentPoly> images{poly("z2", v), poly("z1", v), poly("z2b", v), poly("z1b", v)};
  CHECK(substitute(p, images) == poly("z2^3*z1b - 2*z2^-1", v));
  // a polynomial image cannot receive a negative power
  std::vector<LaurentPoly> bad{poly("z1 + 1", v), poly("z2", v), poly("z1b", v), poly("z2b", v)};
  CHECK_THROWS_AS(substitute(p, bad), NonInvertibleImage);
}

TEST_CASE("evaluation matches direct arithmetic") {
  const auto v = VariableSet::paired({"z1", "z2"});
  const auto p = poly("z1^2*z2b - 3*z1^-1 + 1/2", v);
  const Complex z1(0.3, -1.2), z2(1.1, 0.4);
  const std::vector<Complex> pt{z1, z2, std::conj(z1), std::conj(z2)};
  const Complex direct = z1 * z1 * std::conj(z2) - 3.0 / z1 + 0.5;
  CHECK(std::abs(evaluate(p, pt) - direct) < 1e-12);
  const std::vector<Complex> pole{0.0, z2, 0.0, std::conj(z2)};
  CHECK_THROWS_AS(evaluate(p, pole), PoleAtPoint);
}

TEST_CASE("exact division") {
  const auto v = VariableSet::symbols({"x", "y", "z"});
  const auto num = poly("x^3 - y^3", v);
  CHECK(exact_divide(num, poly("x - y", v)) == poly("x^2 + x*y + y^2", v));
  CHECK(exact_divide(poly("x^2*y^-1 - y^-1", v), poly("x + 1", v)) == poly("x*y^-1 - y^-1", v));
  CHECK(exact_divide(poly("6*x*y", v), poly("2*y", v)) == poly("3*x", v));
  CHECK_THROWS_AS(exact_divide(poly("x*y", v), poly("z", v)), InexactDivision);
  try {
    exact_divide(poly("x^2 + 1", v), poly("x - 1", v));
    FAIL("expected InexactDivision");
  } catch (const InexactDivision& e) {
    CHECK_FALSE(e.remainder().is_zero());
  }
  CHECK_THROWS_AS(exact_divide(num, LaurentPoly(3)), DomainError);

  const auto w = VariableSet::paired({"z"});
  CHECK(exact_divide(poly("z^2 - zb^2", w), poly("z - zb", w)) == poly("z + zb", w));
  CHECK(exact_divide(poly("z^2 - z^-2", w), poly("z - z^-1", w)) == poly("z + z^-1", w));
}

TEST_CASE("reduction modulo torus relations") {
  const auto v = VariableSet::paired({"z1", "z2"});
  QuotientIdeal ideal(4);
  ideal.add(ProductRule{{0, 1}, Rational(1)});
  ideal.add(ProductRule{{2, 3}, Rational(1)});
  CHECK(reduce_mod(poly("z1*z2", v), ideal) == poly("1", v));
  CHECK(reduce_mod(poly("z1^3*z2^2 + z1b*z2b", v), ideal) == reduce_mod(poly("z1 + 1", v), ideal));
  // normal form is idempotent and linear
  const auto p = poly("z1^2*z2^5 - z1b^-1*z2b^2", v);
  const auto r = reduce_mod(p, ideal);
  CHECK(reduce_mod(r, ideal) == r);
  CHECK(reduce_mod(p + poly("z1*z2 - 1", v) * poly("z1b + 7", v), ideal) == r);

  QuotientIdeal spin(2);
  spin.add(PowerRule{1, 2, Monomial{1, 0}});  // z^2 = z1
  const auto w = VariableSet::symbols({"z1", "z"});
  CHECK(reduce_mod(poly("z^5", w), spin) == poly("z1^2*z", w));
  CHECK(reduce_mod(poly("z^-1", w), spin) == poly("z1^-1*z", w));
  CHECK(spin.relations().size() == 1);

  QuotientIdeal clash(2);
  clash.add(ProductRule{{0, 1}, Rational(1)});
  CHECK_THROWS_AS(clash.add(PowerRule{1, 2, Monomial{1, 0}}), NonConfluentIdeal);
}

TEST_CASE("expression grammar") {
  const auto v = VariableSet::symbols({"a", "b"});
  CHECK(poly("-(a - b)^2", v) == poly("-a^2 + 2*a*b - b^2", v));
  CHECK(poly("a*b/b", v) == poly("a", v));
  CHECK(poly("a/b", v) == poly("a*b^-1", v));
  CHECK(poly("a/(2*b^-1)", v) == poly("a*b/2", v));
  CHECK_THROWS_AS(poly("a/(b + 1)", v), InexactDivision);
  CHECK(poly("(a^2 - b^2)/(a + b)", v) == poly("a - b", v));
  CHECK(poly("2/3*a", v) == Rational(2, 3) * poly("a", v));
  CHECK_THROWS_AS(poly("a +", v), ParseError);
  CHECK_THROWS_AS(poly("(a", v), ParseError);
  CHECK_THROWS_AS(poly("c", v), UnknownGenerator);
  const auto [l, r] = split_equation("a^2 = b");
  CHECK(l == "a^2");
  CHECK(r == "b");
  CHECK(split_equation("a").second == "0");
  CHECK(expression_names("s1*s(1,1) + s1 - {Z1,Z1b}") ==
        std::vector<std::string>{"s1", "s(1,1)", "Z1", "Z1b"});
}

TEST_CASE("bracket syntax needs a bracket callback") {
  const auto v = VariableSet::symbols({"a", "b"});
  ExprContext ctx;
  ctx.nvars = 2;
  ctx.resolve = [&](std::string_view n) { return LaurentPoly::variable(2, *v.index_of(n)); };
  CHECK_THROWS(parse_expression("{a,b}", ctx));
  ctx.bracket = [](const LaurentPoly& f, const LaurentPoly& g) { return f * g - g; };
  CHECK(parse_expression("{a,b}", ctx) == poly("a*b - b", v));
}

TEST_CASE("echelon basis") {
  const auto v = VariableSet::symbols({"x", "y"});
  PolyEchelon e;
  CHECK(e.insert(poly("x^2 + y", v)));
  CHECK(e.insert(poly("x*y - 1", v)));
  CHECK_FALSE(e.insert(poly("2*x^2 + 2*y - 3*x*y + 3", v)));
  CHECK(e.rank() == 2);
  CHECK(e.contains(poly("x^2 + y + x*y - 1", v)));
  CHECK_FALSE(e.contains(poly("y", v)));
}

TEST_CASE("random arithmetic identities") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ex(-3, 3), nonneg(0, 3), co(-5, 5);
  auto random_poly = [&](std::uniform_int_distribution<int>& e) {
    LaurentPoly p(3);
    for (int t = 0; t < 4; ++t) p.add_term({e(rng), e(rng), e(rng)}, Rational(co(rng)));
    return p;
  };
  const auto inverse_corner = LaurentPoly::monomial({-4, -4, -4});
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(ex), b = random_poly(ex), c = random_poly(ex);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    // Laurent divisor: negative powers of every variable occur
    const auto d = b * inverse_corner + LaurentPoly::monomial({-4, -4, -4});
    CHECK(exact_divide(a * d, d) == a);
    // polynomial operands
    const auto p = random_poly(nonneg), q = random_poly(nonneg);
    if (!q.is_zero()) CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ex(-6, 6), co(-9, 9);
  auto random_poly = [&] {
    LaurentPoly p(4);
    for (int t = 0; t < 3; ++t) p.add_term({ex(rng), ex(rng), ex(rng), ex(rng)}, Rational(co(rng)));
    return p;
  };
  for (int i = 0; i < 30; ++i) {
    const auto a = random_poly(), b = random_poly();
    const auto pt = adq::testing::paired_point(adq::testing::random_torus(2, rng, 0.2));
    const Complex ea = evaluate(a, pt), eb = evaluate(b, pt);
    const double scale = 1 + std::abs(ea) * std::abs(eb) + std::abs(ea) + std::abs(eb);
    CHECK(std::abs(evaluate(a * b, pt) - ea * eb) <= 1e-10 * scale);
    CHECK(std::abs(evaluate(a + b, pt) - ea - eb) <= 1e-10 * scale);
  }
}
