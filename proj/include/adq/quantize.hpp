#pragma once

#include <optional>
#include <vector>

#include "adq/strata.hpp"
#include "adq/weights.hpp"

namespace adq {

struct SpectrumEntry {
  HighestWeight lambda;
  Rational energy;
  Rational dimension;
  std::optional<LaurentPoly> character;
};

/// Every weight of the group with energy at most the cutoff, sorted by
/// (energy, lambda). Weights are searched inside the ball
/// |lambda| <= sqrt(cutoff + |rho|^2) + |rho|.
std::vector<SpectrumEntry> spectrum(const TorusModel& model, const WeightDatum& d, const Rational& cutoff,
                                    bool with_characters = true);

/// A stratum closure of an A-family torus as the image of a smaller torus:
/// the i-th block of equal coordinates becomes y_i; for SU the last
/// coordinate of multiplicity one is solved from the determinant.
struct StratumParametrization {
  VariableSet vars;
  std::vector<LaurentPoly> images;  // one per model variable, over vars
};

StratumParametrization stratum_parametrization(const TorusModel& model, const StratumDescriptor& stratum);
/// chi pulled back to the stratum; the top stratum returns chi unchanged.
LaurentPoly restrict_to_stratum(const TorusModel& model, const LaurentPoly& chi, const StratumDescriptor& stratum);

struct ProjectionRow {
  HighestWeight lambda;
  Rational energy;
  LaurentPoly restricted;
  /// The character lies in the ideal of functions vanishing on the stratum.
  bool vanishes = false;
};

struct ProjectionTable {
  StratumDescriptor stratum;
  VariableSet vars;
  std::vector<ProjectionRow> rows;
};

ProjectionTable costratified_projection_table(const TorusModel& model, const WeightDatum& d,
                                              const Rational& cutoff, const StratumDescriptor& stratum);

}  // namespace adq
