#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "adq/hilbert.hpp"

namespace adq {

using Partition = std::vector<int>;  // non-increasing parts

/// All partitions of n, finest first within each length, coarsest last.
std::vector<Partition> partitions(int n);
/// True when b arises from a by merging parts (b lies in the closure of a's stratum).
bool is_coarsening(const Partition& a, const Partition& b);

struct StratumDescriptor {
  Partition partition;
  /// Complex dimension: the number of parts, one less for SU.
  int dimension = 0;
  /// Strictly coarser partitions, the strata in the closure.
  std::vector<Partition> closure;
  /// Some root gap fell within a factor 10 of the merge threshold.
  bool ambiguous = false;
  /// Torus point of the classified quotient point, merged roots made equal
  /// (empty when built from a partition alone).
  std::vector<Complex> representative;
};

StratumDescriptor make_stratum(Family family, Partition partition);

/// Roots of w^n - s1 w^(n-1) + ... + (-1)^n sn.
std::vector<Complex> characteristic_roots(std::span<const Complex> sigma);

/// Multiplicity partition of the roots; two roots merge when their gap is at
/// most 1e-6 (1 + max |r|). Clusters of a multiple root are first replaced
/// by their mean when the Taylor coefficients there confirm the multiplicity,
/// since eigenvalue solvers spread an m-fold root by about eps^(1/m).
StratumDescriptor classify_stratum(Family family, std::span<const Complex> sigma);

/// Elementary symmetric values of the roots.
std::vector<Complex> elementary_values(std::span<const Complex> roots);

/// Brackets among the Hilbert-map components of a model, precomputed once.
struct BracketMatrix {
  HilbertMap map;
  PolyMatrix entries;
};

BracketMatrix bracket_matrix(const TorusModel& model);
Eigen::MatrixXcd evaluate_bracket_matrix(const BracketMatrix& b, std::span<const Complex> z);
/// Numeric rank with singular values above 1e-8 times the largest.
int numeric_rank(const Eigen::MatrixXcd& m, double relative_threshold = 1e-8);
int poisson_rank_at(const BracketMatrix& b, std::span<const Complex> z);
int poisson_rank_at(const TorusModel& model, std::span<const Complex> z);

/// A torus point of the given stratum: the i-th part repeats values[i]. For
/// SU, when the last value is omitted it is a root of the determinant condition.
std::vector<Complex> stratum_point(Family family, const Partition& partition,
                                   std::span<const Complex> values);

}  // namespace adq
