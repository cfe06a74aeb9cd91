#include "adq/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace adq {

std::optional<std::pair<int, int>> parse_index_pair(std::string_view text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  int r = 0, s = 0;
  auto a = text.substr(1, comma - 1), b = text.substr(comma + 1, text.size() - comma - 2);
  auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), r);
  auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), s);
  if (ea != std::errc() || eb != std::errc() || pa != a.data() + a.size() || pb != b.data() + b.size())
    return std::nullopt;
  return std::make_pair(r, s);
}

namespace {

struct IndexedName {
  std::string prefix;
  int index;
  bool conjugate;
};

// "e12b" -> {"e", 12, true}
std::optional<IndexedName> split_indexed(std::string_view name) {
  std::size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
  if (i == 0 || i == name.size()) return std::nullopt;
  std::size_t j = i;
  while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
  if (j == i) return std::nullopt;
  bool conj = false;
  if (j < name.size()) {
    if (name.substr(j) != "b") return std::nullopt;
    conj = true;
  }
  int k = 0;
  std::from_chars(name.data() + i, name.data() + j, k);
  return IndexedName{std::string(name.substr(0, i)), k, conj};
}

std::size_t torus_rank(const TorusModel& m) {
  return m.family == Family::G2 ? 3 : static_cast<std::size_t>(m.rank);
}

LaurentPoly z_plus_inverse(const TorusModel& m, std::size_t j) {
  const std::size_t w = m.vars.size();
  return LaurentPoly::variable(w, j) + LaurentPoly::variable(w, j, -1);
}

std::vector<LaurentPoly> z_sums(const TorusModel& m) {
  std::vector<LaurentPoly> out;
  for (std::size_t j = 0; j < static_cast<std::size_t>(m.rank); ++j) out.push_back(z_plus_inverse(m, j));
  return out;
}

// sigma_n(Z) split by the residue of the term degree modulo 4.
std::pair<LaurentPoly, LaurentPoly> split_top(const TorusModel& m) {
  const LaurentPoly top = elementary_of(z_sums(m), m.rank);
  LaurentPoly plus(m.vars.size()), minus(m.vars.size());
  for (const auto& [e, c] : top.terms()) {
    int d = 0;
    for (int j = 0; j < m.rank; ++j) d += e[static_cast<std::size_t>(j)];
    const int r = ((d - m.rank) % 4 + 4) % 4;
    (r == 0 ? plus : minus).add_term(e, c);
  }
  return {plus, minus};
}

Monomial spin_unit(const TorusModel& m) {
  Monomial e(m.vars.size(), 0);
  e[static_cast<std::size_t>(m.rank)] = 1;
  return e;
}

std::optional<LaurentPoly> resolve_parametric(const TorusModel& m, std::string_view name) {
  const std::size_t n = torus_rank(m);
  const bool unitary_torus = is_unitary(m.family) || m.family == Family::G2;
  if (unitary_torus && name.size() > 1 && (name[0] == 's' || name[0] == 't')) {
    if (auto rs = parse_index_pair(name.substr(1))) {
      const int ni = static_cast<int>(n);
      if (name[0] == 's') {
        if (rs->first < 0 || rs->second < 0 || rs->first + rs->second < 1 || rs->first + rs->second > ni)
          throw UnknownGenerator("index out of range in '" + std::string(name) + "'");
        return m.reduce(elementary_multisym(ni, rs->first, rs->second));
      }
      if (rs->first < 0 || rs->second < 0 || rs->first + rs->second < 1)
        throw UnknownGenerator("index out of range in '" + std::string(name) + "'");
      return m.reduce(power_sum_multisym(ni, rs->first, rs->second));
    }
  }
  auto parts = split_indexed(name);
  if (!parts || parts->index < 1) return std::nullopt;
  const int k = parts->index;
  auto finish = [&](LaurentPoly p) { return m.reduce(parts->conjugate ? conjugate(p) : p); };
  if (unitary_torus) {
    if (parts->prefix == "s" && k <= static_cast<int>(n))
      return finish(elementary_multisym(static_cast<int>(n), k, 0));
    if (parts->prefix == "t") return finish(power_sum_multisym(static_cast<int>(n), k, 0));
    return std::nullopt;
  }
  if (parts->prefix == "Z" && k <= m.rank) return finish(z_plus_inverse(m, static_cast<std::size_t>(k - 1)));
  if (parts->prefix == "e" && k <= m.rank) return finish(elementary_of(z_sums(m), k));
  if (parts->prefix == "sig" && k <= m.rank && !parts->conjugate) {
    const std::size_t j = static_cast<std::size_t>(k - 1), w = m.vars.size();
    const std::size_t jb = m.vars.conjugate_of(j);
    Monomial a(w, 0), b(w, 0);
    a[j] = 1, a[jb] = -1;
    b[j] = -1, b[jb] = 1;
    return LaurentPoly::monomial(a) + LaurentPoly::monomial(b);
  }
  return std::nullopt;
}

void add_entry(TorusModel& m, std::string name, std::string origin, LaurentPoly value) {
  m.manifest.push_back({std::move(name), std::move(origin), m.reduce(value)});
}

void add_with_conjugate(TorusModel& m, const std::string& name, const std::string& origin,
                        const LaurentPoly& value) {
  add_entry(m, name, origin, value);
  add_entry(m, name + "b", "conjugate of " + name, conjugate(value));
}

BracketStructure spin_bracket(int n) {
  // Factor 2 on the z_j pairs, 1 across to z, and n/2 on z itself; the last
  // value keeps z^2 - z1...zn a Poisson ideal.
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  BracketStructure s;
  s.coefficients.assign(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t j = 0; j + 1 < m; ++j) {
    s.coefficients[j][j] = 2;
    s.coefficients[j][m - 1] = 1;
    s.coefficients[m - 1][j] = 1;
  }
  s.coefficients[m - 1][m - 1] = Rational(n) / 2;
  s.coefficients[m - 1][m - 1].canonicalize();
  return s;
}

void populate(TorusModel& m) {
  const int n = m.rank;
  const std::size_t w = m.vars.size();
  switch (m.family) {
    case Family::U:
    case Family::SU: {
      const int top = m.family == Family::U ? n : n - 1;
      for (int k = 1; k <= top; ++k) {
        const std::string name = "s" + std::to_string(k);
        m.holomorphic.push_back(name);
        add_with_conjugate(m, name, "elementary symmetric function", elementary_multisym(n, k, 0));
      }
      for (int r = 1; r < n; ++r)
        for (int s = 1; r + s <= n; ++s)
          add_entry(m, "s(" + std::to_string(r) + "," + std::to_string(s) + ")",
                    "elementary bisymmetric function", elementary_multisym(n, r, s));
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::SpinB:
    case Family::SpinD: {
      const auto Z = z_sums(m);
      for (int j = 1; j <= n; ++j) {
        add_with_conjugate(m, "Z" + std::to_string(j), "z_j + 1/z_j", Z[static_cast<std::size_t>(j - 1)]);
        add_entry(m, "sig" + std::to_string(j), "z_j/conj(z_j) + conj(z_j)/z_j",
                  *resolve_parametric(m, "sig" + std::to_string(j)));
      }
      int plain = n;
      if (m.family == Family::D || m.family == Family::SpinB) plain = n - 1;
      if (m.family == Family::SpinD) plain = n - 2;
      for (int k = 1; k <= n; ++k) {
        const std::string name = "e" + std::to_string(k);
        if (k <= plain) m.holomorphic.push_back(name);
        add_with_conjugate(m, name, "elementary symmetric function of the Z_j", elementary_of(Z, k));
      }
      if (m.family == Family::D || m.family == Family::SpinD) {
        auto [plus, minus] = split_top(m);
        if (m.family == Family::D) {
          m.holomorphic.push_back("ep");
          m.holomorphic.push_back("em");
        }
        add_with_conjugate(m, "ep", "even half of e_n", plus);
        add_with_conjugate(m, "em", "odd half of e_n", minus);
      }
      if (is_spin(m.family)) {
        const Monomial z = spin_unit(m);
        Monomial z_over_zb(w, 0);
        z_over_zb[static_cast<std::size_t>(n)] = 1;
        z_over_zb[m.vars.conjugate_of(static_cast<std::size_t>(n))] = -1;
        // The full (Z/2)^n orbit of z; under the D-type group it splits in two.
        LaurentPoly delta = orbit_sum(z, m.weyl);
        if (m.family == Family::SpinD) {
          Monomial odd = z;
          odd[0] = -1;
          delta += orbit_sum(odd, m.weyl);
        }
        add_with_conjugate(m, "delta", "spin orbit sum of z", delta);
        add_entry(m, "sigspin", "spin orbit sum of z/conj(z)", orbit_sum(z_over_zb, m.weyl));
        if (m.family == Family::SpinB) m.holomorphic.push_back("delta");
      }
      if (m.family == Family::SpinD) {
        Monomial odd = spin_unit(m);
        odd[0] = -1;
        add_with_conjugate(m, "dp", "even spin orbit sum", orbit_sum(spin_unit(m), m.weyl));
        add_with_conjugate(m, "dm", "odd spin orbit sum", orbit_sum(odd, m.weyl));
        m.holomorphic.push_back("dp");
        m.holomorphic.push_back("dm");
      }
      break;
    }
    case Family::G2: {
      const LaurentPoly s1 = m.reduce(elementary_multisym(3, 1, 0));
      const LaurentPoly s2 = m.reduce(elementary_multisym(3, 2, 0));
      add_with_conjugate(m, "s1", "first fundamental character of SU(3)", s1);
      add_with_conjugate(m, "s2", "second fundamental character of SU(3)", s2);
      add_with_conjugate(m, "S1", "s1 + s2", s1 + s2);
      add_with_conjugate(m, "S2", "s1 s2", s1 * s2);
      m.holomorphic = {"S1", "S2"};
      const LaurentPoly mixed = elementary_multisym(3, 1, 1);
      add_entry(m, "s(1,1)", "elementary bisymmetric function", mixed);
      std::vector<Monomial> inv;
      for (std::size_t i = 0; i < 3; ++i) {
        Monomial e(3, 0);
        e[i] = -1;
        inv.push_back(e);
      }
      const GroupElement flip = GroupElement::from_holomorphic(m.vars, inv);
      add_entry(m, "sinv", "image of s(1,1) under total inversion", apply(flip, m.reduce(mixed)));
      break;
    }
  }
}

}  // namespace

LaurentPoly TorusModel::resolve(std::string_view name) const {
  if (auto i = vars.index_of(name)) return LaurentPoly::variable(vars.size(), *i);
  for (const auto& g : manifest)
    if (g.name == name) return g.value;
  if (auto p = resolve_parametric(*this, name)) return *p;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "' for " + to_string(family) +
                         "(" + std::to_string(rank) + ")");
}

LaurentPoly TorusModel::poisson(const LaurentPoly& f, const LaurentPoly& g) const {
  if (constraint) return dirac_bracket(f, g, bracket, *constraint);
  return reduce(adq::bracket(f, g, bracket));
}

ExprContext TorusModel::context() const {
  ExprContext ctx;
  ctx.nvars = vars.size();
  ctx.resolve = [this](std::string_view name) { return resolve(name); };
  ctx.bracket = [this](const LaurentPoly& f, const LaurentPoly& g) { return poisson(f, g); };
  return ctx;
}

LaurentPoly TorusModel::parse(std::string_view text) const {
  return reduce(parse_expression(text, context()));
}

std::vector<NamedPolynomial> TorusModel::named(const std::vector<std::string>& names) const {
  std::vector<NamedPolynomial> out;
  for (const auto& n : names) out.push_back({n, resolve(n)});
  return out;
}

std::vector<NamedPolynomial> TorusModel::paired_generators() const {
  auto out = holomorphic_generators();
  for (const auto& n : holomorphic) out.push_back({n + "b", resolve(n + "b")});
  return out;
}

TorusModel build_torus_model(Family family, int rank, const Rational& bracket_scale) {
  TorusModel m;
  m.family = family;
  m.rank = rank;
  m.vars = family_variables(family, rank);
  m.ideal = family_ideal(family, rank);
  m.weyl = build_weyl_group(family, rank);
  const std::size_t holo = m.vars.holomorphic_count();
  m.bracket = is_spin(family) ? spin_bracket(rank) : BracketStructure::diagonal(holo);
  m.bracket.scale = bracket_scale;
  if (family == Family::SU || family == Family::G2)
    m.constraint = determinant_constraints(static_cast<int>(holo));
  m.top_invertible = family == Family::U;
  populate(m);
  return m;
}

}  // namespace adq
