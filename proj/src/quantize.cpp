#include "adq/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace adq {

namespace {

std::vector<HighestWeight> labels_in_ball(const WeightDatum& d, double radius) {
  const std::size_t r = d.fundamental.size();
  const double bound = radius * radius * (1.0 + 1e-12);
  auto norm2 = [&](const HighestWeight& l) {
    RationalVector v(d.ambient, Rational(0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < d.ambient; ++i) v[i] += Rational(l[k]) * d.fundamental[k][i];
    return to_double(d.inner(v, v));
  };

  std::vector<HighestWeight> out;
  if (d.family == Family::U) {
    // the determinant power a is the last coordinate of lambda, so |a| <= radius,
    // and the first coordinate bounds the remaining labels by 2 * radius
    const int a_max = static_cast<int>(std::floor(radius));
    const int sum_max = static_cast<int>(std::floor(2 * radius));
    std::vector<HighestWeight> heads{HighestWeight(r - 1, 0)};
    for (std::size_t k = 0; k < r - 1; ++k) {
      std::vector<HighestWeight> next;
      for (const auto& h : heads) {
        int used = 0;
        for (std::size_t j = 0; j < k; ++j) used += h[j];
        for (int a = 0; used + a <= sum_max; ++a) {
          auto e = h;
          e[k] = a;
          next.push_back(e);
        }
      }
      heads = std::move(next);
    }
    for (auto h : heads)
      for (int a = -a_max; a <= a_max; ++a) {
        h.push_back(a);
        if (norm2(h) <= bound) out.push_back(h);
        h.pop_back();
      }
    return out;
  }

  // the norm grows along every fundamental direction, so a search from 0 that
  // stops at the ball boundary sees the whole ball
  std::set<HighestWeight> seen{HighestWeight(r, 0)};
  std::deque<HighestWeight> queue{HighestWeight(r, 0)};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (std::size_t k = 0; k < r; ++k) {
      auto next = cur;
      ++next[k];
      if (seen.contains(next) || norm2(next) > bound) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return out;
}

}  // namespace

std::vector<SpectrumEntry> spectrum(const TorusModel& model, const WeightDatum& d, const Rational& cutoff,
                                    bool with_characters) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  const double rho_norm = std::sqrt(to_double(d.inner(d.rho, d.rho)));
  const double radius = std::sqrt(to_double(cutoff) + rho_norm * rho_norm) + rho_norm;
  std::vector<SpectrumEntry> out;
  for (const auto& lambda : labels_in_ball(d, radius)) {
    if (!is_group_weight(d, lambda)) continue;
    Rational e = energy(d, lambda);
    if (e > cutoff) continue;
    SpectrumEntry entry{lambda, e, weyl_dimension(d, lambda), std::nullopt};
    if (with_characters) entry.character = weyl_character(model, d, lambda);
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.lambda < b.lambda;
  });
  return out;
}

StratumParametrization stratum_parametrization(const TorusModel& model, const StratumDescriptor& stratum) {
  if (model.family != Family::U && model.family != Family::SU)
    throw UnsupportedFamily("restriction to strata is implemented for U and SU");
  const auto& parts = stratum.partition;
  int total = 0;
  for (int p : parts) total += p;
  if (total != model.rank) throw DomainError("partition does not match the rank");
  const bool su = model.family == Family::SU;
  if (su && parts.back() != 1)
    throw UnsupportedStratum("the SU determinant cannot be solved monomially on this stratum");

  const std::size_t params = parts.size() - (su ? 1 : 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < params; ++i) names.push_back("y" + std::to_string(i + 1));
  StratumParametrization out{VariableSet::paired(names), {}};
  const std::size_t width = out.vars.size();

  std::vector<LaurentPoly> holomorphic;
  for (std::size_t part = 0; part < parts.size(); ++part) {
    LaurentPoly image;
    if (part < params) {
      image = LaurentPoly::variable(width, part);
    } else {
      Monomial e(width, 0);
      for (std::size_t i = 0; i < params; ++i) e[i] = -parts[i];
      image = LaurentPoly::monomial(e);
    }
    for (int k = 0; k < parts[part]; ++k) holomorphic.push_back(image);
  }
  out.images = holomorphic;
  for (const auto& h : holomorphic) out.images.push_back(conjugate(h));
  return out;
}

LaurentPoly restrict_to_stratum(const TorusModel& model, const LaurentPoly& chi, const StratumDescriptor& stratum) {
  if (std::all_of(stratum.partition.begin(), stratum.partition.end(), [](int p) { return p == 1; }) &&
      static_cast<int>(stratum.partition.size()) == model.rank)
    return chi;
  const auto param = stratum_parametrization(model, stratum);
  return substitute(chi, param.images);
}

ProjectionTable costratified_projection_table(const TorusModel& model, const WeightDatum& d,
                                              const Rational& cutoff, const StratumDescriptor& stratum) {
  ProjectionTable table;
  table.stratum = stratum;
  const bool top = static_cast<int>(stratum.partition.size()) == model.rank;
  table.vars = top ? model.vars : stratum_parametrization(model, stratum).vars;
  for (auto& entry : spectrum(model, d, cutoff)) {
    auto restricted = restrict_to_stratum(model, *entry.character, stratum);
    const bool vanishes = restricted.is_zero();
    table.rows.push_back({entry.lambda, entry.energy, std::move(restricted), vanishes});
  }
  return table;
}

}  // namespace adq
