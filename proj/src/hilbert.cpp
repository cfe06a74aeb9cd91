#include "adq/hilbert.hpp"

#include <cmath>
#include <numbers>

namespace adq {

std::vector<Complex> HilbertMap::torus_point(std::span<const Complex> z) const {
  const std::size_t m = vars.holomorphic_count();
  if (z.size() != m) throw DomainError("expected " + std::to_string(m) + " torus coordinates");
  std::vector<Complex> point(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (z[i] == Complex(0.0)) throw PoleAtPoint("torus coordinate " + vars.name(i) + " is zero");
    point[i] = z[i];
    point[i + m] = std::conj(z[i]);
  }
  return point;
}

std::vector<Complex> HilbertMap::evaluate(std::span<const Complex> z) const {
  const auto point = torus_point(z);
  std::vector<Complex> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(adq::evaluate(c.value, point));
  return out;
}

PolyMatrix HilbertMap::jacobian() const {
  const std::size_t m = vars.holomorphic_count();
  PolyMatrix j;
  for (const auto& c : components) {
    std::vector<LaurentPoly> row;
    for (std::size_t v = 0; v < m; ++v) {
      row.push_back(partial_derivative(c.value, v));
      row.push_back(partial_derivative(c.value, v + m));
    }
    j.push_back(std::move(row));
  }
  return j;
}

HilbertMap unitary_hilbert_map(int n) {
  if (n < 1) throw DomainError("rank must be positive");
  HilbertMap h{family_variables(Family::U, n), {}};
  for (int j = 1; j <= n; ++j)
    h.components.push_back({"h" + std::to_string(j), power_sum_multisym(n, j, 0) / Rational(j)});
  for (int j = 1; j <= n; ++j)
    h.components.push_back({"h" + std::to_string(j) + "b", power_sum_multisym(n, 0, j) / Rational(j)});
  for (int total = 2; total <= n; ++total)
    for (int j = total - 1; j >= 1; --j) {
      const int k = total - j;
      h.components.push_back({"t(" + std::to_string(j) + "," + std::to_string(k) + ")",
                              power_sum_multisym(n, j, k)});
    }
  return h;
}

HilbertMap hilbert_map(const TorusModel& model) {
  if (model.family == Family::U) return unitary_hilbert_map(model.rank);
  return {model.vars, model.paired_generators()};
}

HilbertMap canoe_hilbert_map() {
  return {family_variables(Family::SU, 2),
          {{"Z", elementary_multisym(2, 1, 0)},
           {"Zb", elementary_multisym(2, 0, 1)},
           {"tau", power_sum_multisym(2, 1, 1)},
           {"sig", elementary_multisym(2, 1, 1)}}};
}

PolyMatrix symbolic_gram(const HilbertMap& h) {
  const auto j = h.jacobian();
  const std::size_t d = j.size();
  std::vector<std::vector<LaurentPoly>> conj_j(d);
  for (std::size_t a = 0; a < d; ++a)
    for (const auto& entry : j[a]) conj_j[a].push_back(conjugate(entry));
  PolyMatrix m(d, std::vector<LaurentPoly>(d, LaurentPoly(h.vars.size())));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < j[a].size(); ++c) m[a][b] += j[a][c] * conj_j[b][c];
  return m;
}

Eigen::MatrixXcd gram_matrix(const HilbertMap& h, std::span<const Complex> z) {
  const auto point = h.torus_point(z);
  const auto j = h.jacobian();
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(2 * h.vars.holomorphic_count());
  Eigen::MatrixXcd jz(rows, cols);
  for (Eigen::Index a = 0; a < rows; ++a)
    for (Eigen::Index c = 0; c < cols; ++c) jz(a, c) = evaluate(j[a][c], point);
  return jz * jz.adjoint();
}

std::vector<std::vector<Rewrite>> gram_in_components(const HilbertMap& h, int degree_cap,
                                                     const QuotientIdeal& ideal) {
  std::vector<std::vector<Rewrite>> out;
  for (const auto& row : symbolic_gram(h)) {
    std::vector<Rewrite> r;
    for (const auto& entry : row) r.push_back(rewrite_in_generators(entry, h.components, degree_cap, ideal));
    out.push_back(std::move(r));
  }
  return out;
}

LaurentPoly determinant(const PolyMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return LaurentPoly::constant(0, Rational(1));
  auto m = input;
  const std::size_t width = m[0][0].nvars();
  LaurentPoly previous = LaurentPoly::constant(width, Rational(1));
  Rational sign(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return LaurentPoly(width);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

LaurentPoly parse_symbols(const VariableSet& names, std::string_view text) {
  ExprContext ctx;
  ctx.nvars = names.size();
  ctx.resolve = [&](std::string_view name) {
    auto i = names.index_of(name);
    if (!i) throw UnknownGenerator("unknown coordinate " + std::string(name));
    return LaurentPoly::variable(names.size(), *i);
  };
  return parse_expression(text, ctx);
}

PolyMatrix expressions_of(const std::vector<std::vector<Rewrite>>& rewrites) {
  PolyMatrix out;
  for (const auto& row : rewrites) {
    std::vector<LaurentPoly> r;
    for (const auto& entry : row) r.push_back(entry.expression);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

MembershipModel unitary_membership_model() {
  const auto h = unitary_hilbert_map(2);
  MembershipModel m;
  std::vector<std::string> names;
  for (const auto& c : h.components) names.push_back(c.name);
  m.coordinates = VariableSet::symbols(names);
  m.gram = expressions_of(gram_in_components(h, 4));
  m.relations.push_back(
      parse_symbols(m.coordinates, "(2*t(1,1) - h1*h1b)^2 - (4*h2 - h1^2)*(4*h2b - h1b^2)"));
  m.conjugate_pairs = {{0, 2}, {1, 3}, {4, 4}};
  // 2 sigma_2 = tau_1^2 - tau_2
  m.nonvanishing.push_back(parse_symbols(m.coordinates, "h1^2 - 2*h2"));
  return m;
}

MembershipModel canoe_membership_model() {
  const auto h = canoe_hilbert_map();
  MembershipModel m;
  m.coordinates = VariableSet::symbols({"Z", "Zb", "tau", "sig"});
  m.gram = expressions_of(gram_in_components(h, 4, family_ideal(Family::SU, 2)));
  m.relations.push_back(parse_symbols(m.coordinates, "tau + sig - Z*Zb"));
  m.relations.push_back(parse_symbols(m.coordinates, "sig^2 + Z^2 + Zb^2 - Z*Zb*sig - 4"));
  m.conjugate_pairs = {{0, 1}, {2, 2}, {3, 3}};
  return m;
}

std::vector<Complex> canoe_candidate(double x, double y, double b) {
  return {Complex(x, y), Complex(x, -y), Complex(2 * b), Complex(x * x + y * y - 2 * b)};
}

double relative_residual(const LaurentPoly& p, std::span<const Complex> point) {
  double scale = 0;
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::monomial(e, c);
    scale += std::abs(evaluate(term, point));
  }
  return std::abs(evaluate(p, point)) / (1.0 + scale);
}

Membership psd_membership(const MembershipModel& model, std::span<const Complex> candidate,
                          double tolerance) {
  const std::size_t d = model.coordinates.size();
  if (candidate.size() != d) throw DomainError("candidate has the wrong number of coordinates");
  Membership out;
  for (auto [a, b] : model.conjugate_pairs) {
    const double gap = std::abs(candidate[b] - std::conj(candidate[a]));
    if (gap > tolerance * (1.0 + std::abs(candidate[a])))
      throw RelationViolation("coordinates " + model.coordinates.name(a) + " and " +
                              model.coordinates.name(b) + " are not conjugate");
  }
  for (const auto& p : model.nonvanishing)
    if (std::abs(evaluate(p, candidate)) < 1e-12) throw RelationViolation("candidate lies on the excluded divisor");
  for (const auto& r : model.relations) out.relation_residual = std::max(out.relation_residual, relative_residual(r, candidate));
  if (out.relation_residual > tolerance)
    throw RelationViolation("candidate is off the variety (relative residual " +
                            std::to_string(out.relation_residual) + ")");

  const auto n = static_cast<Eigen::Index>(model.gram.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) m(a, b) = evaluate(model.gram[a][b], candidate);
  const Eigen::MatrixXcd hermitian = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  out.min_eigenvalue = ev.minCoeff();
  const double norm = ev.cwiseAbs().maxCoeff();
  out.member = out.min_eigenvalue >= -tolerance * norm;
  return out;
}

CanoeRecord su2_canoe(Complex z) {
  if (z == Complex(0.0)) throw PoleAtPoint("z = 0");
  CanoeRecord r;
  r.z = z;
  const double r2 = std::norm(z);
  r.x = z.real() + z.real() / r2;
  r.y = z.imag() - z.imag() / r2;
  r.b = (r2 + 1.0 / r2) / 2.0;
  const double xy2 = r.x * r.x + r.y * r.y;
  const double rhs = r.b * r.b - 1.0 - (r.b - 1.0) * xy2 / 2.0;
  r.relation_residual = std::abs(r.y * r.y - rhs) / (1.0 + r.y * r.y + std::abs(rhs));
  r.bracket_value = 4.0 * r.b - xy2;
  r.kappa_reduced = kappa_reduced(Complex(r.x, r.y));
  return r;
}

double kappa_reduced(Complex z) {
  if (std::abs(z - 2.0) == 0.0 || std::abs(z + 2.0) == 0.0) return 0.0;
  const double l = std::log(std::abs(z / 2.0 + std::sqrt(z * z / 4.0 - 1.0)));
  return l * l;
}

double kappa_eval(const TorusModel& model, std::span<const Complex> z) {
  const std::size_t m = model.holomorphic_count();
  if (z.size() != m) throw DomainError("expected " + std::to_string(m) + " torus coordinates");
  const std::size_t count = is_spin(model.family) ? m - 1 : m;
  double k = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (z[i] == Complex(0.0)) throw PoleAtPoint("torus coordinate " + model.vars.name(i) + " is zero");
    const double l = std::log(std::abs(z[i]));
    k += l * l;
  }
  return k;
}

std::array<double, 2> real_boundary_su3(double alpha) {
  const Complex w = 2.0 * std::polar(1.0, alpha) + std::polar(1.0, -2.0 * alpha);
  return {w.real(), w.imag()};
}

}  // namespace adq
