#pragma once

#include <vector>

#include "ordcurves/linalg.hpp"
#include "ordcurves/point.hpp"
#include "ordcurves/polynomial.hpp"

namespace ordcurves {

// Coordinates of the degree-d Veronese lift: monomials of degree 1..d in the global order.
class VeroneseIndex {
 public:
  explicit VeroneseIndex(int d);
  int degree() const { return d_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  // Position of a non-constant monomial of degree <= d.
  std::size_t position(Monomial mono) const;

 private:
  int d_;
  std::vector<Monomial> monomials_;
};

// psi_d(a) = (a1^n a2^m) over the index set.
Vector lift(const PlanePoint& a, int d);
std::vector<Vector> lift_all(const std::vector<PlanePoint>& points, int d);
// (1, psi_d(a)): one row of the vanishing-space system for degree <= d polynomials.
Vector homogeneous_lift(const PlanePoint& a, int d);

// Affine hyperplane r0 + sum r_nm z_nm = 0 in the lift space, stored with the
// first nonzero entry of (r0, r) equal to 1.
class HyperplaneForm {
 public:
  // Throws PreconditionError if all coefficients r vanish.
  static HyperplaneForm from_augmented(const Vector& augmented);

  const Vector& augmented() const { return aug_; }
  const Rational& constant() const { return aug_[0]; }
  Vector coefficients() const { return Vector(aug_.begin() + 1, aug_.end()); }
  std::size_t ambient_dim() const { return aug_.size() - 1; }
  bool contains(const Vector& z) const;

  friend bool operator==(const HyperplaneForm& a, const HyperplaneForm& b) { return a.aug_ == b.aug_; }
  friend bool operator<(const HyperplaneForm& a, const HyperplaneForm& b) { return compare(a.aug_, b.aug_) < 0; }

 private:
  Vector aug_;
};

// tau_d: non-constant polynomial of degree <= d to its hyperplane.
HyperplaneForm tau(const BivariatePolynomial& p, int d);
// Polynomial whose coefficients are the hyperplane's entries.
BivariatePolynomial polynomial_of(const HyperplaneForm& h, int d);
PlaneCurve tau_inverse(const HyperplaneForm& h, int d);

// Multiplies p by (x - c)^(d - deg p) for the least integer c >= 0 such that the
// line x = c misses every point of avoid.
BivariatePolynomial pad_degree(const BivariatePolynomial& p, int d, const std::vector<PlanePoint>& avoid);

}  // namespace ordcurves
