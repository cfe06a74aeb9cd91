#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adq/laurent.hpp"

namespace adq {

enum class Family { U, SU, B, C, D, SpinB, SpinD, G2 };

std::string to_string(Family f);
/// Accepts "U", "A" (alias of U), "SU", "B", "C", "D", "spinB", "spinD", "G2".
Family parse_family(std::string_view name);
bool is_unitary(Family f);
bool is_spin(Family f);

/// A signed monomial substitution. images[i] is the exponent vector that
/// replaces variable i, signs[i] its sign.
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(std::size_t nvars);
  /// Builds the full substitution from images of the holomorphic block of a
  /// paired variable set; conjugate variables receive the mirrored images.
  static GroupElement from_holomorphic(const VariableSet& vars,
                                       const std::vector<Monomial>& holomorphic_images,
                                       const std::vector<int>& holomorphic_signs = {});

  std::size_t nvars() const { return images_.size(); }
  const std::vector<Monomial>& images() const { return images_; }
  const std::vector<int>& signs() const { return signs_; }

  /// Image of x^e with its sign.
  std::pair<Monomial, int> act(const Monomial& e) const;
  /// (*this) after h: apply(g.compose(h), p) == apply(g, apply(h, p)).
  GroupElement compose(const GroupElement& h) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<Monomial> images_;
  std::vector<int> signs_;
};

LaurentPoly apply(const GroupElement& g, const LaurentPoly& p);

/// Finite group given by generators; the element list is enumerated once, on
/// first use, and shared by copies.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::size_t nvars, std::vector<GroupElement> generators,
              QuotientIdeal ideal = {});

  std::size_t nvars() const { return nvars_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const QuotientIdeal& ideal() const { return ideal_; }
  const std::vector<GroupElement>& elements() const;
  std::size_t order() const { return elements().size(); }

 private:
  struct Cache;
  std::size_t nvars_ = 0;
  std::vector<GroupElement> generators_;
  QuotientIdeal ideal_;
  std::shared_ptr<Cache> cache_;
};

/// Sum of the distinct monomials in the orbit of x^e, each with coefficient 1
/// (after reduction modulo the group's ideal when it has one).
LaurentPoly orbit_sum(const Monomial& e, const FiniteGroup& g);
bool is_invariant(const LaurentPoly& p, const FiniteGroup& g);

/// Canonical variables of each family's torus: z1..zn (plus z for spin
/// families, z1..z3 for G2), paired with their conjugates.
VariableSet family_variables(Family f, int n);
/// Torus relations: none for U, B, C, D; z1...zn = 1 (and conjugate) for SU
/// and G2; z^2 = z1...zn (and conjugate) for spin families.
QuotientIdeal family_ideal(Family f, int n);
FiniteGroup build_weyl_group(Family f, int n);
/// z -> -z on a spin torus.
GroupElement deck_transformation(Family f, int n);

/// Orbit sum of z1...zr * conj(z_{r+1})...conj(z_{r+s}) under S_n on the
/// paired variables z1..zn.
LaurentPoly elementary_multisym(int n, int r, int s);
/// sum_j z_j^r conj(z_j)^s.
LaurentPoly power_sum_multisym(int n, int r, int s);
/// sigma_k of the n given polynomials.
LaurentPoly elementary_of(const std::vector<LaurentPoly>& values, int k);

}  // namespace adq
