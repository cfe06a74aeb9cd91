#include "adq/echelon.hpp"

namespace adq {

std::pair<LaurentPoly, LaurentPoly> PolyEchelon::reduce(LaurentPoly p, LaurentPoly tag) const {
  LaurentPoly kept(p.nvars());
  while (!p.is_zero()) {
    const Monomial lead = p.leading_monomial();
    const Rational c = p.leading_coefficient();
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      kept.add_term(lead, c);
      p.add_term(lead, -c);
      continue;
    }
    p -= c * it->second.value;
    if (!it->second.tag.is_zero()) tag -= c * it->second.tag;
  }
  return {kept, tag};
}

bool PolyEchelon::insert(const LaurentPoly& p, const LaurentPoly& tag) {
  auto [r, t] = reduce(p, tag);
  if (r.is_zero()) return false;
  const Rational lc = r.leading_coefficient();
  r /= lc;
  if (!t.is_zero()) t /= lc;
  Monomial key = r.leading_monomial();
  rows_.emplace(std::move(key), Row{std::move(r), std::move(t)});
  return true;
}

}  // namespace adq
