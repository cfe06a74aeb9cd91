#pragma once

#include <string>
#include <vector>

#include "adq/model.hpp"

namespace adq {

using RationalVector = std::vector<Rational>;
/// Coefficients on the fundamental weights. For U(n) the last entry is the
/// power of the determinant and may be negative.
using HighestWeight = std::vector<int>;

/// A signed permutation of the ambient coordinates: (w v)_i = signs[i] * v[perm[i]].
struct WeylElement {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  int sign = 1;  // determinant on the span of the roots
};

/// Root data in ambient coordinates: e_1..e_n of the standard torus (three
/// coordinates modulo (1,1,1) for G2, which sits inside the SU(3) torus).
struct WeightDatum {
  Family family = Family::U;
  int rank = 0;
  std::size_t ambient = 0;
  std::vector<RationalVector> positive_roots;
  RationalVector rho;
  std::vector<RationalVector> fundamental;
  /// SU and G2 pair weights after projecting onto the sum-zero hyperplane.
  bool traceless = false;
  std::vector<WeylElement> weyl;

  Rational inner(const RationalVector& a, const RationalVector& b) const;
  RationalVector apply(const WeylElement& w, const RationalVector& v) const;
  /// One line describing the invariant form, for reports.
  std::string convention() const;
};

WeightDatum weight_datum(Family family, int rank);

/// sum_i lambda_i * omega_i; throws DomainError for a non-dominant weight or
/// one that is not a weight of the group (odd spin labels on B and D).
RationalVector weight_vector(const WeightDatum& d, const HighestWeight& lambda);
bool is_group_weight(const WeightDatum& d, const HighestWeight& lambda);

/// |lambda + rho|^2 - |rho|^2.
Rational energy(const WeightDatum& d, const HighestWeight& lambda);
/// prod over positive roots of <lambda + rho, a> / <rho, a>.
Rational weyl_dimension(const WeightDatum& d, const HighestWeight& lambda);

/// Alternant quotient sum_w sgn(w) e^{w(lambda+rho)} / sum_w sgn(w) e^{w rho},
/// written on the model's torus and reduced modulo its ideal.
LaurentPoly weyl_character(const TorusModel& model, const WeightDatum& d, const HighestWeight& lambda);

}  // namespace adq
