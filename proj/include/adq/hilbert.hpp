#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adq/model.hpp"

namespace adq {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Ordered invariants on a paired torus, viewed as a map into C^d.
struct HilbertMap {
  VariableSet vars;
  std::vector<NamedPolynomial> components;

  std::size_t dimension() const { return components.size(); }
  /// Holomorphic coordinates followed by their complex conjugates; throws
  /// PoleAtPoint on a zero coordinate.
  std::vector<Complex> torus_point(std::span<const Complex> z) const;
  std::vector<Complex> evaluate(std::span<const Complex> z) const;
  /// d x 2m matrix of partial derivatives, columns ordered z1, z1b, z2, z2b, ...
  PolyMatrix jacobian() const;
};

/// U(n): tau_(j,0)/j for j = 1..n, their conjugates, then the mixed
/// tau_(j,k), j,k >= 1, j+k <= n, by total degree and then larger j first.
/// Components are named h<j>, h<j>b and t(j,k).
HilbertMap unitary_hilbert_map(int n);
/// The unitary map above for U, holomorphic generators and conjugates otherwise.
HilbertMap hilbert_map(const TorusModel& model);
/// Z, Zb, tau, sig of SU(2) written on the two-variable torus z1 z2 = 1.
HilbertMap canoe_hilbert_map();

/// Entry (a, b) is sum_c dF_a/dx_c * conj(dF_b/dx_c).
PolyMatrix symbolic_gram(const HilbertMap& h);
Eigen::MatrixXcd gram_matrix(const HilbertMap& h, std::span<const Complex> z);
/// The symbolic Gram entries rewritten as polynomials in the components.
std::vector<std::vector<Rewrite>> gram_in_components(const HilbertMap& h, int degree_cap,
                                                     const QuotientIdeal& ideal = {});

/// Determinant by fraction-free elimination.
LaurentPoly determinant(const PolyMatrix& m);

/// Semialgebraic data in coordinates of the quotient: the Gram matrix as
/// polynomials in the coordinates, the relations cutting out the variety and
/// the reality conditions.
struct MembershipModel {
  VariableSet coordinates;
  PolyMatrix gram;
  std::vector<LaurentPoly> relations;
  /// (a, b) requires c_b = conj(c_a); (a, a) requires c_a real.
  std::vector<std::pair<std::size_t, std::size_t>> conjugate_pairs;
  /// Must stay away from zero (sigma_n for U(n)).
  std::vector<LaurentPoly> nonvanishing;
};

/// U(2) in the coordinates h1, h2, h1b, h2b, t(1,1) of unitary_hilbert_map(2).
MembershipModel unitary_membership_model();
/// SU(2) in the coordinates Z, Zb, tau, sig.
MembershipModel canoe_membership_model();
/// Coordinates Z, Zb, tau, sig of the real point (X, Y, b).
std::vector<Complex> canoe_candidate(double x, double y, double b);

struct Membership {
  bool member = false;
  double min_eigenvalue = 0;
  std::vector<double> eigenvalues;
  double relation_residual = 0;
};

/// Checks the relations (RelationViolation when off the variety), then
/// whether the Gram matrix at the candidate is positive semidefinite up to
/// -tolerance times its spectral norm.
Membership psd_membership(const MembershipModel& model, std::span<const Complex> candidate,
                          double tolerance = 1e-9);

/// |p(c)| divided by 1 + sum of |term(c)|, so that large points compare fairly.
double relative_residual(const LaurentPoly& p, std::span<const Complex> point);

struct CanoeRecord {
  Complex z;
  double x = 0, y = 0, b = 0;
  double relation_residual = 0;
  /// {X, Y} = 4b - (X^2 + Y^2) in the one-variable normalization.
  double bracket_value = 0;
  double kappa_reduced = 0;
};

CanoeRecord su2_canoe(Complex z);
/// log^2 |Z/2 + sqrt(Z^2/4 - 1)|, zero at Z = +-2.
double kappa_reduced(Complex z);
/// sum_j (log|z_j|)^2 over the torus coordinates (the spin coordinate excluded).
double kappa_eval(const TorusModel& model, std::span<const Complex> z);
/// u + iv = 2 e^{i alpha} + e^{-2 i alpha}.
std::array<double, 2> real_boundary_su3(double alpha);

}  // namespace adq
