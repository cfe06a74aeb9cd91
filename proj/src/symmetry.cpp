#include "adq/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

namespace adq {

std::string to_string(Family f) {
  switch (f) {
    case Family::U: return "U";
    case Family::SU: return "SU";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::SpinB: return "spinB";
    case Family::SpinD: return "spinD";
    case Family::G2: return "G2";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "U" || name == "A") return Family::U;
  if (name == "SU") return Family::SU;
  if (name == "B") return Family::B;
  if (name == "C") return Family::C;
  if (name == "D") return Family::D;
  if (name == "spinB" || name == "SpinB") return Family::SpinB;
  if (name == "spinD" || name == "SpinD") return Family::SpinD;
  if (name == "G2") return Family::G2;
  throw UnsupportedFamily("unknown family '" + std::string(name) + "'");
}

bool is_unitary(Family f) { return f == Family::U || f == Family::SU; }
bool is_spin(Family f) { return f == Family::SpinB || f == Family::SpinD; }

// ---------------------------------------------------------------- elements

GroupElement GroupElement::identity(std::size_t nvars) {
  GroupElement g;
  g.images_.assign(nvars, Monomial(nvars, 0));
  for (std::size_t i = 0; i < nvars; ++i) g.images_[i][i] = 1;
  g.signs_.assign(nvars, 1);
  return g;
}

GroupElement GroupElement::from_holomorphic(const VariableSet& vars,
                                            const std::vector<Monomial>& holomorphic_images,
                                            const std::vector<int>& holomorphic_signs) {
  if (!vars.is_paired()) throw DomainError("group elements need a paired variable set");
  const std::size_t m = vars.holomorphic_count();
  if (holomorphic_images.size() != m) throw DomainError("one image per holomorphic variable");
  GroupElement g;
  g.images_.assign(2 * m, Monomial(2 * m, 0));
  g.signs_.assign(2 * m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (holomorphic_images[i].size() != m) throw DomainError("image width mismatch");
    for (std::size_t j = 0; j < m; ++j) {
      g.images_[i][j] = holomorphic_images[i][j];
      g.images_[i + m][j + m] = holomorphic_images[i][j];
    }
    const int s = holomorphic_signs.empty() ? 1 : holomorphic_signs.at(i);
    g.signs_[i] = g.signs_[i + m] = s;
  }
  return g;
}

std::pair<Monomial, int> GroupElement::act(const Monomial& e) const {
  Monomial out(images_.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out = monomial_product(out, monomial_scaled(images_[i], e[i]));
    if (signs_[i] < 0 && (e[i] % 2 != 0)) sign = -sign;
  }
  return {out, sign};
}

GroupElement GroupElement::compose(const GroupElement& h) const {
  GroupElement out;
  out.images_.reserve(h.images_.size());
  out.signs_.reserve(h.signs_.size());
  for (std::size_t i = 0; i < h.images_.size(); ++i) {
    auto [m, s] = act(h.images_[i]);
    out.images_.push_back(std::move(m));
    out.signs_.push_back(s * h.signs_[i]);
  }
  return out;
}

LaurentPoly apply(const GroupElement& g, const LaurentPoly& p) {
  if (p.nvars() != g.nvars() && !(p.nvars() == 0))
    throw DomainError("group element and polynomial live on different variables");
  if (p.nvars() == 0) return p;
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    auto [m, s] = g.act(e);
    out.add_term(m, s > 0 ? c : Rational(-c));
  }
  return out;
}

// ---------------------------------------------------------------- groups

struct FiniteGroup::Cache {
  std::once_flag once;
  std::vector<GroupElement> elements;
};

FiniteGroup::FiniteGroup(std::size_t nvars, std::vector<GroupElement> generators,
                         QuotientIdeal ideal)
    : nvars_(nvars),
      generators_(std::move(generators)),
      ideal_(std::move(ideal)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_)
    if (g.nvars() != nvars_) throw DomainError("generator acts on the wrong number of variables");
}

const std::vector<GroupElement>& FiniteGroup::elements() const {
  if (!cache_) {
    static const std::vector<GroupElement> empty;
    return empty;
  }
  std::call_once(cache_->once, [this] {
    constexpr std::size_t kMaxOrder = 100000;
    std::set<GroupElement> seen;
    std::deque<GroupElement> queue;
    auto id = GroupElement::identity(nvars_);
    seen.insert(id);
    queue.push_back(id);
    cache_->elements.push_back(id);
    while (!queue.empty()) {
      GroupElement cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : generators_) {
        GroupElement next = g.compose(cur);
        if (seen.insert(next).second) {
          if (seen.size() > kMaxOrder) throw DomainError("group closure does not terminate");
          cache_->elements.push_back(next);
          queue.push_back(std::move(next));
        }
      }
    }
  });
  return cache_->elements;
}

LaurentPoly orbit_sum(const Monomial& e, const FiniteGroup& g) {
  std::set<Monomial, GrlexGreater> orbit;
  for (const auto& el : g.elements()) {
    Monomial m = el.act(e).first;
    if (!g.ideal().empty()) {
      // A torus relation may introduce a coefficient; orbit monomials here are units.
      const Rational f = g.ideal().reduce_monomial(m);
      if (f != 1) throw DomainError("orbit monomial reduces with a nontrivial coefficient");
    }
    orbit.insert(std::move(m));
  }
  if (g.order() % orbit.size() != 0) throw Error("orbit size does not divide the group order");
  LaurentPoly out(g.nvars());
  for (const auto& m : orbit) out.add_term(m, Rational(1));
  return out;
}

bool is_invariant(const LaurentPoly& p, const FiniteGroup& g) {
  const LaurentPoly base = reduce_mod(p, g.ideal());
  for (const auto& gen : g.generators())
    if (reduce_mod(apply(gen, base), g.ideal()) != base) return false;
  return true;
}

// ---------------------------------------------------------------- families

namespace {

void check_rank(Family f, int n) {
  int lo = 1, hi = 8;
  switch (f) {
    case Family::SU: lo = 2; break;
    case Family::D: lo = 2; break;
    case Family::SpinB: lo = 1; break;
    case Family::SpinD: lo = 2; break;
    case Family::G2: lo = 2; hi = 2; break;
    default: break;
  }
  if (n < lo || n > hi)
    throw UnsupportedFamily("rank " + std::to_string(n) + " is not supported for family " +
                            to_string(f));
}

std::size_t torus_width(Family f, int n) {
  if (f == Family::G2) return 3;
  return static_cast<std::size_t>(n) + (is_spin(f) ? 1 : 0);
}

Monomial unit(std::size_t m, std::size_t i, Exponent k = 1) {
  Monomial e(m, 0);
  e[i] = k;
  return e;
}

std::vector<Monomial> identity_images(std::size_t m) {
  std::vector<Monomial> im;
  for (std::size_t i = 0; i < m; ++i) im.push_back(unit(m, i));
  return im;
}

}  // namespace

VariableSet family_variables(Family f, int n) {
  check_rank(f, n);
  std::vector<std::string> names;
  const int count = f == Family::G2 ? 3 : n;
  for (int i = 1; i <= count; ++i) names.push_back("z" + std::to_string(i));
  if (is_spin(f)) names.push_back("z");
  return VariableSet::paired(names);
}

QuotientIdeal family_ideal(Family f, int n) {
  check_rank(f, n);
  const std::size_t m = torus_width(f, n);
  QuotientIdeal ideal(2 * m);
  if (f == Family::SU || f == Family::G2) {
    std::vector<std::size_t> holo, anti;
    for (std::size_t i = 0; i < m; ++i) {
      holo.push_back(i);
      anti.push_back(i + m);
    }
    ideal.add(ProductRule{holo, Rational(1)});
    ideal.add(ProductRule{anti, Rational(1)});
  } else if (is_spin(f)) {
    const std::size_t z = m - 1;
    Monomial image(2 * m, 0), image_bar(2 * m, 0);
    for (std::size_t j = 0; j < z; ++j) {
      image[j] = 1;
      image_bar[j + m] = 1;
    }
    ideal.add(PowerRule{z, 2, image});
    ideal.add(PowerRule{z + m, 2, image_bar});
  }
  return ideal;
}

FiniteGroup build_weyl_group(Family f, int n) {
  const VariableSet vars = family_variables(f, n);
  const std::size_t m = vars.holomorphic_count();
  const std::size_t perm_count = f == Family::G2 ? 3 : static_cast<std::size_t>(n);
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i + 1 < perm_count; ++i) {
    auto im = identity_images(m);
    std::swap(im[i], im[i + 1]);
    gens.push_back(GroupElement::from_holomorphic(vars, im));
  }
  auto invert = [&](std::vector<std::size_t> which) {
    auto im = identity_images(m);
    for (auto j : which) im[j] = unit(m, j, -1);
    if (is_spin(f)) {
      Monomial& zim = im[m - 1];
      for (auto j : which) zim[j] = -1;
    }
    gens.push_back(GroupElement::from_holomorphic(vars, im));
  };
  switch (f) {
    case Family::U:
    case Family::SU: break;
    case Family::B:
    case Family::C:
    case Family::SpinB: invert({0}); break;
    case Family::D:
    case Family::SpinD: invert({0, 1}); break;
    case Family::G2: invert({0, 1, 2}); break;
  }
  return FiniteGroup(vars.size(), std::move(gens), family_ideal(f, n));
}

GroupElement deck_transformation(Family f, int n) {
  if (!is_spin(f)) throw UnsupportedFamily("deck transformations exist only on spin tori");
  const VariableSet vars = family_variables(f, n);
  const std::size_t m = vars.holomorphic_count();
  std::vector<int> signs(m, 1);
  signs[m - 1] = -1;
  return GroupElement::from_holomorphic(vars, identity_images(m), signs);
}

LaurentPoly elementary_multisym(int n, int r, int s) {
  if (n < 1 || r < 0 || s < 0 || r + s < 1 || r + s > n)
    throw DomainError("elementary_multisym needs r, s >= 0 and 1 <= r + s <= n");
  const FiniteGroup sym = build_weyl_group(Family::U, n);
  Monomial e(2 * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < r; ++i) e[i] = 1;
  for (int i = r; i < r + s; ++i) e[n + i] = 1;
  return orbit_sum(e, sym);
}

LaurentPoly power_sum_multisym(int n, int r, int s) {
  if (n < 1 || r < 0 || s < 0 || r + s < 1)
    throw DomainError("power_sum_multisym needs r, s >= 0 and r + s >= 1");
  LaurentPoly out(2 * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Monomial e(2 * static_cast<std::size_t>(n), 0);
    e[j] = r;
    e[n + j] = s;
    out.add_term(e, Rational(1));
  }
  return out;
}

LaurentPoly elementary_of(const std::vector<LaurentPoly>& values, int k) {
  // Coefficients of prod (1 + v_j t), built one factor at a time.
  if (k < 0 || k > static_cast<int>(values.size())) throw DomainError("elementary index out of range");
  const std::size_t width = values.empty() ? 0 : values.front().nvars();
  std::vector<LaurentPoly> e(values.size() + 1, LaurentPoly(width));
  e[0] = LaurentPoly::constant(width, Rational(1));
  for (std::size_t j = 0; j < values.size(); ++j)
    for (std::size_t i = j + 1; i >= 1; --i) e[i] += e[i - 1] * values[j];
  return e[static_cast<std::size_t>(k)];
}

}  // namespace adq
