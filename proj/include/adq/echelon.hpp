#pragma once

#include <map>
#include <optional>

#include "adq/laurent.hpp"

namespace adq {

/// Exact row-echelon basis of a space of Laurent polynomials, keyed by
/// leading monomial. Each row may carry a tag (another polynomial) that is
/// transformed alongside it, which records how the row was combined.
class PolyEchelon {
 public:
  struct Row {
    LaurentPoly value;  // leading coefficient 1
    LaurentPoly tag;
  };

  std::size_t rank() const { return rows_.size(); }
  const std::map<Monomial, Row, GrlexGreater>& rows() const { return rows_; }

  /// Reduces p (and its tag) against the basis; the result has no term on a pivot.
  std::pair<LaurentPoly, LaurentPoly> reduce(LaurentPoly p, LaurentPoly tag = {}) const;
  /// Adds p if it is independent of the basis; returns true when the rank grows.
  bool insert(const LaurentPoly& p, const LaurentPoly& tag = {});
  bool contains(const LaurentPoly& p) const { return reduce(p).first.is_zero(); }

 private:
  std::map<Monomial, Row, GrlexGreater> rows_;
};

}  // namespace adq
