#include "adq/relations.hpp"

#include <algorithm>
#include <map>

namespace adq {

// ---------------------------------------------------------------- discriminant

namespace {

std::vector<std::vector<Complex>> sylvester_with_derivative(std::span<const Complex> a) {
  const std::size_t n = a.size() - 1;
  std::vector<Complex> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back(a[k] * static_cast<double>(n - k));
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<Complex>> m(size, std::vector<Complex>(size, Complex(0)));
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t k = 0; k <= n; ++k) m[r][r + k] = a[k];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) m[n - 1 + r][r + k] = d[k];
  return m;
}

int disc_sign(std::size_t n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

}  // namespace

LaurentPoly discriminant(std::span<const LaurentPoly> a) {
  if (a.size() < 3) throw DomainError("discriminant needs degree at least 2");
  if (a[0].is_zero()) throw DomainError("leading coefficient vanishes");
  std::size_t width = 0;
  for (const auto& c : a) width = std::max(width, c.nvars());
  std::vector<LaurentPoly> coeffs;
  for (const auto& c : a) coeffs.push_back(c.nvars() == width ? c : c.widened(width));
  const std::size_t n = coeffs.size() - 1;
  std::vector<LaurentPoly> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back(coeffs[k] * Rational(static_cast<long>(n - k)));
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<LaurentPoly>> m(size, std::vector<LaurentPoly>(size, LaurentPoly(width)));
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t k = 0; k <= n; ++k) m[r][r + k] = coeffs[k];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) m[n - 1 + r][r + k] = d[k];

  // Fraction-free elimination; every division is exact.
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(width, Rational(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < size && m[p][k].is_zero()) ++p;
      if (p == size) return LaurentPoly(width);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? LaurentPoly(width) : exact_divide(num, prev);
      }
      m[i][k] = LaurentPoly(width);
    }
    prev = m[k][k];
  }
  LaurentPoly res = m[size - 1][size - 1];
  if (sign * disc_sign(n) < 0) res = -res;
  return res.is_zero() ? res : exact_divide(res, coeffs[0]);
}

Complex discriminant(std::span<const Complex> a) {
  if (a.size() < 3) throw DomainError("discriminant needs degree at least 2");
  if (std::abs(a[0]) == 0.0) throw DomainError("leading coefficient vanishes");
  auto m = sylvester_with_derivative(a);
  const std::size_t size = m.size();
  Complex det = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < size; ++i)
      if (std::abs(m[i][k]) > std::abs(m[p][k])) p = i;
    if (std::abs(m[p][k]) == 0.0) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < size; ++i) {
      const Complex f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < size; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return static_cast<double>(disc_sign(a.size() - 1)) * det / a[0];
}

// ---------------------------------------------------------------- symmetric functions

LaurentPoly symmetric_to_elementary(const LaurentPoly& p, std::size_t n) {
  LaurentPoly out(n);
  if (p.is_zero()) return out;
  const std::size_t width = p.nvars();
  if (width < n) throw DomainError("polynomial has fewer than n variables");
  std::vector<LaurentPoly> z;
  for (std::size_t i = 0; i < n; ++i) z.push_back(LaurentPoly::variable(width, i));
  std::vector<LaurentPoly> e;
  for (std::size_t k = 1; k <= n; ++k) e.push_back(elementary_of(z, static_cast<int>(k)));

  LaurentPoly rest = p;
  while (!rest.is_zero()) {
    const Monomial lead = rest.leading_monomial();
    const Rational c = rest.leading_coefficient();
    for (std::size_t i = n; i < width; ++i)
      if (lead[i] != 0) throw NotInvariant("polynomial involves variables beyond z1..zn");
    for (std::size_t i = 0; i < n; ++i) {
      if (lead[i] < 0) throw NotInvariant("negative exponents are not handled");
      if (i + 1 < n && lead[i] < lead[i + 1]) throw NotInvariant("polynomial is not symmetric");
    }
    Monomial power(n, 0);
    LaurentPoly term = LaurentPoly::constant(width, c);
    for (std::size_t k = 0; k < n; ++k) {
      power[k] = lead[k] - (k + 1 < n ? lead[k + 1] : 0);
      if (power[k] > 0) term *= e[k].pow(static_cast<unsigned>(power[k]));
    }
    out.add_term(power, c);
    rest -= term;
  }
  return out;
}

// ---------------------------------------------------------------- catalog

namespace {

const std::string kDisc3 = "(s1^2*s2^2 - 4*s2^3 - 4*s1^3*s3 - 27*s3^2 + 18*s1*s2*s3)";
const std::string kDisc3Unimodular = "(s1^2*s2^2 - 4*s2^3 - 4*s1^3 - 27 + 18*s1*s2)";

std::vector<Relation> build_catalog() {
  std::vector<Relation> c;
  auto add = [&](std::string tag, Family f, int n, std::string lhs, std::string rhs,
                 std::string origin, RelationContext ctx = RelationContext::Torus) {
    c.push_back({std::move(tag), f, n, std::move(lhs), std::move(rhs), std::move(origin), ctx});
  };
  add("u2-quartic", Family::U, 2, "(s1^2 - 4*s2)*(s1b^2 - 4*s2b)", "(s1*s1b - 2*s(1,1))^2",
      "defining relation of the U(2) quotient");
  add("u2-tau-mixed", Family::U, 2, "2*t(1,1) - t1*t1b", "s1*s1b - 2*s(1,1)",
      "mixed Gram factor in both generator systems");
  add("u2-tau-holomorphic", Family::U, 2, "2*t2 - t1^2", "s1^2 - 4*s2",
      "holomorphic Gram factor in both generator systems");
  add("u2-tau-antiholomorphic", Family::U, 2, "2*t2b - t1b^2", "s1b^2 - 4*s2b",
      "antiholomorphic Gram factor in both generator systems");
  add("u2-real", Family::U, 2, "(X^2 - Y^2 - 4*U)^2 + 4*(X*Y - 2*V)^2", "(X^2 + Y^2 - 2*sig)^2",
      "U(2) relation in real coordinates", RelationContext::U2Real);
  add("u3-sigma2bar", Family::U, 3, kDisc3 + "*s2b",
      "(9*s3^2 + s2^3 - 4*s1*s2*s3)*s1b^2 + (4*s1^2*s3 - 3*s2*s3 - s1*s2^2)*s1b*s(1,1)"
      " + (6*s1*s3 - s2^2)*s1b*s(2,1) + (s2^2 - 3*s1*s3)*s(1,1)^2"
      " + (9*s3 - s1*s2)*s(1,1)*s(2,1) + (s1^2 - 3*s2)*s(2,1)^2",
      "reference U(3) expression for the discriminant times s2b");
  add("u3-sigma3bar", Family::U, 3, kDisc3 + "*s3b",
      "s3^2*s1b^3 - s2*s3*s1b^2*s(1,1) + (s2^2 - 2*s1*s3)*s1b^2*s(2,1) + s1*s3*s1b*s(1,1)^2"
      " - ((s1^2 - 2*s2)*s1 - s1^3 + 3*s1*s2 - 3*s3)*s1b*s(1,1)*s(2,1) - s3*s(1,1)^3"
      " + (s1^2 - 2*s2)*s1b*s(2,1)^2 + s2*s(1,1)^2*s(2,1) - s1*s(1,1)*s(2,1)^2 + s(2,1)^3",
      "reference U(3) expression for the discriminant times s3b");
  add("u3-quartic", Family::U, 3, "(s1^2 - 4*s2)*(s1b^2 - 4*s2b)",
      "(s1*s1b - 2*s(1,1))^2 + 2*s(2,1)*s1b + 2*s(1,2)*s1", "reference U(3) quartic relation");
  add("su3-sigma2bar", Family::SU, 3, kDisc3Unimodular + "*s2b",
      "(9 + s2^3 - 4*s1*s2)*s1b^2 + (4*s1^2 - 3*s2 - s1*s2^2)*s1b*s(1,1)"
      " + (6*s1 - s2^2)*s1b*s(2,1) + (s2^2 - 3*s1)*s(1,1)^2"
      " + (9 - s1*s2)*s(1,1)*s(2,1) + (s1^2 - 3*s2)*s(2,1)^2",
      "reference SU(3) specialization of u3-sigma2bar");
  add("su3-sigma3bar", Family::SU, 3, kDisc3Unimodular,
      "s1b^3 - s2*s1b^2*s(1,1) + (s2^2 - 2*s1)*s1b^2*s(2,1) + s1*s1b*s(1,1)^2"
      " - ((s1^2 - 2*s2)*s1 - s1^3 + 3*s1*s2 - 3)*s1b*s(1,1)*s(2,1) - s(1,1)^3"
      " + (s1^2 - 2*s2)*s1b*s(2,1)^2 + s2*s(1,1)^2*s(2,1) - s1*s(1,1)*s(2,1)^2 + s(2,1)^3",
      "reference SU(3) specialization of u3-sigma3bar");
  add("su2-cubic", Family::SU, 2, "s(1,1)^2 + s1^2 + s1b^2 - s1*s1b*s(1,1) - 4", "0",
      "defining relation of the SU(2) quotient");
  add("su2-real", Family::C, 1, "Y^2", "b^2 - 1 - (b - 1)*(X^2 + Y^2)/2",
      "SU(2) relation in the real generators X, Y, b", RelationContext::SU2Real);
  add("su2-bracket", Family::C, 1, "{Z1,Z1b}", "Z1*Z1b - 2*sig1",
      "SU(2) bracket in the one-variable model");
  add("su2-real-bracket", Family::C, 1, "{Z1,Z1b}", "4*b - X^2 - Y^2",
      "SU(2) bracket of the real generators, {X,Y} = {Z,Zb}", RelationContext::SU2Real);
  return c;
}

std::string power_of_two(int k) { return std::to_string(1L << k); }

// sum_{m < top, m = top mod 2} 2^(n-m-1) e_m, with e_0 = 1.
std::string parity_tail(int n, int top) {
  std::string out;
  for (int m = top - 2; m >= 0; m -= 2) {
    out += " + " + power_of_two(n - m - 1);
    if (m > 0) out += "*e" + std::to_string(m);
  }
  return out;
}

}  // namespace

const std::vector<Relation>& relation_catalog() {
  static const std::vector<Relation> catalog = build_catalog();
  return catalog;
}

std::vector<Relation> model_relations(const TorusModel& m) {
  std::vector<Relation> out;
  for (const auto& r : relation_catalog())
    if (r.family == m.family && r.rank == m.rank) out.push_back(r);
  const int n = m.rank;
  const Family f = m.family;
  auto add = [&](std::string tag, std::string lhs, std::string rhs, std::string origin) {
    out.push_back({std::move(tag), f, n, std::move(lhs), std::move(rhs), std::move(origin),
                   RelationContext::Torus});
  };
  if (f == Family::B || f == Family::C || f == Family::D || is_spin(f)) {
    for (int j = 1; j <= n; ++j) {
      const std::string J = std::to_string(j);
      add("torus-" + J, "sig" + J + "^2 + Z" + J + "^2 + Z" + J + "b^2 - Z" + J + "*Z" + J + "b*sig" + J + " - 4",
          "0", "relation among Z_j, its conjugate and sig_j");
      if (!is_spin(f))
        add("sp-bracket-" + J, "{Z" + J + ",Z" + J + "b}", "Z" + J + "*Z" + J + "b - 2*sig" + J,
            "bracket of Z_j with its conjugate");
    }
  }
  if (is_spin(f)) {
    std::string rhs = power_of_two(n);
    for (int k = 1; k <= n; ++k) {
      rhs += " + ";
      if (k < n) rhs += power_of_two(n - k) + "*";
      rhs += "e" + std::to_string(k);
    }
    add("delta-square", "delta^2", rhs, "square of the spin orbit sum");
  }
  if (f == Family::D || f == Family::SpinD) {
    const std::string top = "e" + std::to_string(n);
    const std::string even = parity_tail(n, n), odd = parity_tail(n, n - 1);
    const std::string below = n >= 2 ? "e" + std::to_string(n - 1) : "1";
    add("dn-split", top, "ep + em", "splitting of e_n into its even and odd halves");
    add("d-product", "(ep" + even + ")*(em" + even + ")", "(" + below + odd + ")^2",
        "relation between the halves of e_n");
    if (f == Family::SpinD) {
      add("spin-square-plus", "dp^2", "ep" + even, "square of the even half-spin character");
      add("spin-square-minus", "dm^2", "em" + even, "square of the odd half-spin character");
      add("spin-product", "dp*dm", below + odd, "product of the half-spin characters");
    }
  }
  return out;
}

std::optional<Relation> find_relation(const std::string& tag, const TorusModel* model) {
  for (const auto& r : relation_catalog())
    if (r.tag == tag) return r;
  if (model)
    for (const auto& r : model_relations(*model))
      if (r.tag == tag) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------- verification

namespace {

struct Evaluation {
  ExprContext ctx;
  VariableSet vars;
  std::function<LaurentPoly(const LaurentPoly&)> normalize;
};

Evaluation u2_real_context() {
  Evaluation ev;
  ev.vars = VariableSet::symbols({"x1", "y1", "x2", "y2"});
  ev.ctx.nvars = 4;
  ev.ctx.resolve = [](std::string_view name) -> LaurentPoly {
    auto v = [](std::size_t i) { return LaurentPoly::variable(4, i); };
    const LaurentPoly x1 = v(0), y1 = v(1), x2 = v(2), y2 = v(3);
    if (name == "x1") return x1;
    if (name == "y1") return y1;
    if (name == "x2") return x2;
    if (name == "y2") return y2;
    if (name == "X") return x1 + x2;
    if (name == "Y") return y1 + y2;
    if (name == "U") return x1 * x2 - y1 * y2;
    if (name == "V") return x1 * y2 + x2 * y1;
    if (name == "sig") return Rational(2) * (x1 * x2 + y1 * y2);
    throw UnknownGenerator("unknown real coordinate '" + std::string(name) + "'");
  };
  ev.normalize = [](const LaurentPoly& p) { return p; };
  return ev;
}

// X = (Z + Zb)/2 and Y = (Z - Zb)/(2i); Y enters only through Y^2 = -(Z - Zb)^2/4.
Evaluation su2_real_context(const TorusModel& m) {
  Evaluation ev;
  ev.vars = m.vars;
  ev.ctx = m.context();
  const LaurentPoly Z = m.resolve("Z1"), Zb = m.resolve("Z1b");
  const std::size_t w = m.vars.size();
  Monomial r2(w, 0), r2inv(w, 0);
  r2[0] = r2[1] = 1;
  r2inv[0] = r2inv[1] = -1;
  const LaurentPoly X = (Z + Zb) / Rational(2);
  const LaurentPoly Y2 = -((Z - Zb) * (Z - Zb)) / Rational(4);
  const LaurentPoly b = (LaurentPoly::monomial(r2) + LaurentPoly::monomial(r2inv)) / Rational(2);
  auto base = ev.ctx.resolve;
  ev.ctx.resolve = [=](std::string_view name) -> LaurentPoly {
    if (name == "X") return X;
    if (name == "b") return b;
    if (name == "Y") throw DomainError("Y is only available in even powers");
    return base(name);
  };
  ev.ctx.resolve_power = [=](std::string_view name, long k) -> std::optional<LaurentPoly> {
    if (name != "Y") return std::nullopt;
    if (k % 2 != 0 || k < 0) throw DomainError("Y is only available in even powers");
    return Y2.pow(static_cast<unsigned>(k / 2));
  };
  ev.normalize = [&m](const LaurentPoly& p) { return m.reduce(p); };
  return ev;
}

}  // namespace

RelationCheck verify_relation(const TorusModel& model, const Relation& rel) {
  if (rel.family != model.family || rel.rank != model.rank)
    throw DomainError("relation '" + rel.tag + "' belongs to " + to_string(rel.family) + "(" +
                      std::to_string(rel.rank) + ")");
  Evaluation ev;
  switch (rel.context) {
    case RelationContext::Torus:
      ev.ctx = model.context();
      ev.vars = model.vars;
      ev.normalize = [&model](const LaurentPoly& p) { return model.reduce(p); };
      break;
    case RelationContext::U2Real: ev = u2_real_context(); break;
    case RelationContext::SU2Real: ev = su2_real_context(model); break;
  }
  const LaurentPoly lhs = parse_expression(rel.lhs, ev.ctx);
  const LaurentPoly rhs = parse_expression(rel.rhs, ev.ctx);
  LaurentPoly residual = ev.normalize(lhs - rhs);
  const bool pass = residual.is_zero();
  return {pass, std::move(residual), ev.vars};
}

// ---------------------------------------------------------------- derivation

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

DerivedRelation derive_relation(int n, int r, int s) {
  if (n < 2 || n > 4 || s < 2 || r < 0 || r + s > n)
    throw DomainError("derive_relation needs 2 <= s, r >= 0, r + s <= n and 2 <= n <= 4");
  const std::size_t N = static_cast<std::size_t>(n);
  const std::size_t width = 2 * N;  // z1..zn, then s_0..s_{n-1}
  auto z = [&](std::size_t i, Exponent k = 1) { return LaurentPoly::variable(width, i, k); };
  auto sym = [&](std::size_t k) { return LaurentPoly::variable(width, N + k); };
  const LaurentPoly one = LaurentPoly::constant(width, Rational(1));

  // conj(z_j) = N_j / D_j with s_k = s(k,1) and s_0 = s1b.
  std::vector<LaurentPoly> numer(N, LaurentPoly(width)), denom(N, one);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) {
      LaurentPoly t = sym(k);
      if (N - 1 - k > 0) t *= z(j, static_cast<Exponent>(N - 1 - k));
      numer[j] += (k % 2 == 0) ? t : -t;
    }
    for (std::size_t i = 0; i < N; ++i)
      if (i != j) denom[j] *= z(j) - z(i);
  }
  LaurentPoly delta = one;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) delta *= (z(i) - z(j)).pow(2);

  std::vector<std::vector<std::size_t>> holo_sets, anti_sets;
  std::vector<std::size_t> cur;
  subsets(N, static_cast<std::size_t>(r), 0, cur, holo_sets);
  subsets(N, static_cast<std::size_t>(s), 0, cur, anti_sets);
  LaurentPoly total(width);
  for (const auto& J : anti_sets) {
    LaurentPoly dj = one, nj = one;
    for (auto j : J) {
      dj *= denom[j];
      nj *= numer[j];
    }
    const LaurentPoly quotient = exact_divide(delta, dj) * nj;
    for (const auto& I : holo_sets) {
      if (std::any_of(I.begin(), I.end(), [&](std::size_t i) { return std::find(J.begin(), J.end(), i) != J.end(); }))
        continue;
      LaurentPoly zi = one;
      for (auto i : I) zi *= z(i);
      total += zi * quotient;
    }
  }

  // Group by the s-monomial; each coefficient is symmetric in z.
  std::map<Monomial, LaurentPoly> groups;
  for (const auto& [e, c] : total.terms()) {
    Monomial key(e.begin() + static_cast<long>(N), e.end());
    Monomial zpart(e.begin(), e.begin() + static_cast<long>(N));
    auto [it, fresh] = groups.try_emplace(key, LaurentPoly(N));
    it->second.add_term(zpart, c);
  }
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("s" + std::to_string(k));
  names.push_back("s1b");
  for (int k = 1; k < n; ++k) names.push_back("s(" + std::to_string(k) + ",1)");
  const VariableSet target = VariableSet::symbols(names);

  auto embed = [&](const LaurentPoly& elem, const Monomial& tail) {
    LaurentPoly out(width);
    for (const auto& [e, c] : elem.terms()) {
      Monomial full(e.begin(), e.end());
      full.insert(full.end(), tail.begin(), tail.end());
      out.add_term(full, c);
    }
    return out;
  };
  LaurentPoly alpha(width);
  for (const auto& [tail, coeff] : groups) alpha += embed(symmetric_to_elementary(coeff, N), tail);
  LaurentPoly delta_z(N);
  for (const auto& [e, c] : delta.terms()) delta_z.add_term(Monomial(e.begin(), e.begin() + static_cast<long>(N)), c);
  const LaurentPoly beta = embed(symmetric_to_elementary(delta_z, N), Monomial(N, 0));

  DerivedRelation out;
  out.names = target;
  out.beta = beta;
  out.alpha = alpha;
  const std::string name = "s(" + std::to_string(r) + "," + std::to_string(s) + ")";
  out.relation = {"derived-u" + std::to_string(n) + "-" + std::to_string(r) + "-" + std::to_string(s),
                  Family::U,
                  n,
                  "(" + to_string(beta, target) + ")*" + name,
                  to_string(alpha, target),
                  "discriminant times " + name + " cleared of denominators",
                  RelationContext::Torus};
  out.check = verify_relation(build_torus_model(Family::U, n), out.relation);
  if (!out.check.pass) throw Error("derived relation failed its own expansion check");
  return out;
}


SpinBracketSplit spin_bracket_split(const TorusModel& model) {
  if (!is_spin(model.family)) throw UnsupportedFamily("spin_bracket_split needs spinB or spinD");
  const auto delta = model.resolve("delta"), deltab = model.resolve("deltab");
  SpinBracketSplit out;
  out.a = model.reduce(model.poisson(delta, deltab) + Rational(2) * model.resolve("sigspin"));
  out.b = model.reduce(delta * deltab - out.a);
  out.invariant = is_invariant(out.a, model.weyl) && is_invariant(out.b, model.weyl);
  return out;
}

}  // namespace adq
