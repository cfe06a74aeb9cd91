#include "adq/strata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adq {

namespace {

void extend_partitions(int remaining, int largest, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    cur.push_back(part);
    extend_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

// Can the parts of `fine` be grouped so that group sums give `coarse`?
bool groups_into(std::vector<int>& fine, std::size_t next, std::vector<int>& room) {
  if (next == fine.size()) return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; });
  for (std::size_t i = 0; i < room.size(); ++i) {
    if (room[i] < fine[next]) continue;
    if (i > 0 && room[i] == room[i - 1]) continue;  // symmetric choice already tried
    room[i] -= fine[next];
    if (groups_into(fine, next + 1, room)) return true;
    room[i] += fine[next];
  }
  return false;
}

struct Taylor {
  std::vector<Complex> value;
  std::vector<double> scale;
};

// Taylor coefficients of P at c, with the same computed for |P| at |c| as a scale.
Taylor taylor_at(std::span<const Complex> monic_coeffs, Complex c) {
  const std::size_t n = monic_coeffs.size() - 1;
  std::vector<Complex> a(monic_coeffs.begin(), monic_coeffs.end());
  std::vector<double> b;
  for (auto x : monic_coeffs) b.push_back(std::abs(x));
  const double ac = std::abs(c);
  Taylor t;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 1; i + k <= n; ++i) {
      a[i] += a[i - 1] * c;
      b[i] += b[i - 1] * ac;
    }
    t.value.push_back(a[n - k]);
    t.scale.push_back(b[n - k]);
  }
  return t;
}

std::vector<std::vector<std::size_t>> single_linkage(std::span<const Complex> r, double gap) {
  const std::size_t n = r.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(r[i] - r[j]) <= gap) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return groups;
}

constexpr double kMergeGap = 1e-6;
constexpr double kCandidateGap = 1e-3;
constexpr double kMultiplicityTolerance = 1e-12;

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw DomainError("partitions need a positive integer");
  std::vector<Partition> out;
  Partition cur;
  extend_partitions(n, n, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.size() > b.size(); });
  return out;
}

bool is_coarsening(const Partition& a, const Partition& b) {
  if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0)) return false;
  if (b.size() > a.size()) return false;
  std::vector<int> fine = a;
  std::sort(fine.rbegin(), fine.rend());
  std::vector<int> room = b;
  std::sort(room.rbegin(), room.rend());
  return groups_into(fine, 0, room);
}

StratumDescriptor make_stratum(Family family, Partition partition) {
  if (family != Family::U && family != Family::SU) throw UnsupportedFamily("strata are implemented for U and SU");
  std::sort(partition.rbegin(), partition.rend());
  StratumDescriptor s;
  s.partition = partition;
  s.dimension = static_cast<int>(partition.size()) - (family == Family::SU ? 1 : 0);
  const int n = std::accumulate(partition.begin(), partition.end(), 0);
  for (const auto& p : partitions(n))
    if (p.size() < partition.size() && is_coarsening(partition, p)) s.closure.push_back(p);
  return s;
}

std::vector<Complex> characteristic_roots(std::span<const Complex> sigma) {
  const auto n = static_cast<Eigen::Index>(sigma.size());
  if (n == 0) throw DomainError("no coefficients");
  // companion matrix of w^n + c1 w^(n-1) + ... + cn with c_k = (-1)^k s_k
  // first row holds -c_k = (-1)^(k+1) s_k
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) companion(0, k) = ((k % 2 == 0) ? 1.0 : -1.0) * sigma[k];
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> elementary_values(std::span<const Complex> roots) {
  std::vector<Complex> e(roots.size() + 1, Complex(0.0));
  e[0] = 1.0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * roots[i];
  return {e.begin() + 1, e.end()};
}

StratumDescriptor classify_stratum(Family family, std::span<const Complex> sigma) {
  const std::size_t n = sigma.size();
  if (n == 0) throw DomainError("no coefficients");
  if (family == Family::U && std::abs(sigma[n - 1]) < 1e-12) throw DomainError("sigma_n vanishes");
  if (family == Family::SU && std::abs(sigma[n - 1] - 1.0) > 1e-9) throw DomainError("sigma_n differs from 1");

  auto roots = characteristic_roots(sigma);
  double largest = 0;
  for (auto r : roots) largest = std::max(largest, std::abs(r));
  const double scale = 1.0 + largest;

  std::vector<Complex> monic{1.0};
  for (std::size_t k = 0; k < n; ++k) monic.push_back(((k % 2 == 0) ? -1.0 : 1.0) * sigma[k]);
  for (const auto& group : single_linkage(roots, kCandidateGap * scale)) {
    if (group.size() < 2) continue;
    Complex mean = 0.0;
    for (auto i : group) mean += roots[i];
    mean /= static_cast<double>(group.size());
    const auto t = taylor_at(monic, mean);
    bool multiple = true;
    for (std::size_t k = 0; k < group.size(); ++k)
      multiple = multiple && std::abs(t.value[k]) <= kMultiplicityTolerance * t.scale[k];
    if (multiple)
      for (auto i : group) roots[i] = mean;
  }

  const double gap = kMergeGap * scale;
  Partition partition;
  std::vector<Complex> representative;
  for (const auto& g : single_linkage(roots, gap)) {
    partition.push_back(static_cast<int>(g.size()));
    Complex mean = 0.0;
    for (auto i : g) mean += roots[i];
    mean /= static_cast<double>(g.size());
    representative.insert(representative.end(), g.size(), mean);
  }
  auto s = make_stratum(family, partition);
  s.representative = std::move(representative);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::abs(roots[i] - roots[j]);
      if (d > gap && d <= 10 * gap) s.ambiguous = true;
    }
  return s;
}

BracketMatrix bracket_matrix(const TorusModel& model) {
  BracketMatrix b{hilbert_map(model), {}};
  const auto& comps = b.map.components;
  const std::size_t d = comps.size();
  b.entries.assign(d, std::vector<LaurentPoly>(d, LaurentPoly(model.vars.size())));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      b.entries[i][j] = model.poisson(comps[i].value, comps[j].value);
      b.entries[j][i] = -b.entries[i][j];
    }
  return b;
}

Eigen::MatrixXcd evaluate_bracket_matrix(const BracketMatrix& b, std::span<const Complex> z) {
  const auto point = b.map.torus_point(z);
  const auto d = static_cast<Eigen::Index>(b.entries.size());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = evaluate(b.entries[i][j], point);
  return m;
}

int numeric_rank(const Eigen::MatrixXcd& m, double relative_threshold) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > relative_threshold * sv(0)) ++rank;
  return rank;
}

int poisson_rank_at(const BracketMatrix& b, std::span<const Complex> z) {
  return numeric_rank(evaluate_bracket_matrix(b, z));
}

int poisson_rank_at(const TorusModel& model, std::span<const Complex> z) {
  return poisson_rank_at(bracket_matrix(model), z);
}

std::vector<Complex> stratum_point(Family family, const Partition& partition,
                                   std::span<const Complex> values) {
  if (family != Family::U && family != Family::SU) throw UnsupportedFamily("strata are implemented for U and SU");
  std::vector<Complex> v(values.begin(), values.end());
  if (family == Family::SU && v.size() + 1 == partition.size()) {
    Complex prod = 1.0;
    for (std::size_t i = 0; i < v.size(); ++i) prod *= std::pow(v[i], partition[i]);
    v.push_back(std::pow(1.0 / prod, 1.0 / partition.back()));
  }
  if (v.size() != partition.size()) throw DomainError("one value per part is required");
  std::vector<Complex> z;
  for (std::size_t i = 0; i < partition.size(); ++i) z.insert(z.end(), static_cast<std::size_t>(partition[i]), v[i]);
  return z;
}

}  // namespace adq
