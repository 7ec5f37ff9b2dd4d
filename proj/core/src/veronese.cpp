#include "ordcurves/veronese.hpp"

#include <algorithm>

#include "ordcurves/errors.hpp"

namespace ordcurves {

VeroneseIndex::VeroneseIndex(int d) : d_(d) {
  if (d < 1) throw PreconditionError("Veronese degree must be at least 1");
  monomials_ = monomials_up_to(d, false);
}

std::size_t VeroneseIndex::position(Monomial mono) const {
  int k = mono.degree();
  if (k < 1 || k > d_ || mono.n < 0 || mono.m < 0) throw PreconditionError("monomial outside the lift index set");
  // Degrees 1..k-1 contribute sum (j+1) = k(k+1)/2 - 1 entries; within degree k, x^k comes first.
  return static_cast<std::size_t>(k * (k + 1) / 2 - 1 + (k - mono.n));
}

Vector lift(const PlanePoint& a, int d) {
  if (d < 1) throw PreconditionError("Veronese degree must be at least 1");
  Vector out;
  out.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2 - 1));
  // Powers of each coordinate, reused across monomials.
  std::vector<Rational> px(d + 1), py(d + 1);
  px[0] = py[0] = 1;
  for (int i = 1; i <= d; ++i) {
    px[i] = px[i - 1] * a.x;
    py[i] = py[i - 1] * a.y;
  }
  for (int k = 1; k <= d; ++k)
    for (int n = k; n >= 0; --n) out.push_back(px[n] * py[k - n]);
  return out;
}

std::vector<Vector> lift_all(const std::vector<PlanePoint>& points, int d) {
  std::vector<Vector> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(lift(p, d));
  return out;
}

Vector homogeneous_lift(const PlanePoint& a, int d) {
  Vector z = lift(a, d);
  z.insert(z.begin(), Rational(1));
  return z;
}

HyperplaneForm HyperplaneForm::from_augmented(const Vector& augmented) {
  if (augmented.size() < 2) throw PreconditionError("hyperplane needs at least one coordinate");
  bool nonconstant = std::any_of(augmented.begin() + 1, augmented.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (!nonconstant) throw PreconditionError("hyperplane form has no non-constant coefficient");
  HyperplaneForm h;
  h.aug_ = normalize_leading(augmented);
  return h;
}

bool HyperplaneForm::contains(const Vector& z) const {
  if (z.size() != ambient_dim()) throw PreconditionError("point dimension does not match hyperplane");
  Rational s = aug_[0];
  for (std::size_t i = 0; i < z.size(); ++i) s += aug_[i + 1] * z[i];
  return sgn(s) == 0;
}

HyperplaneForm tau(const BivariatePolynomial& p, int d) {
  if (p.degree() < 1) throw PreconditionError("tau needs a non-constant polynomial");
  if (p.degree() > d) throw PreconditionError("polynomial degree exceeds d");
  VeroneseIndex idx(d);
  Vector aug(idx.size() + 1);
  for (const auto& [mono, c] : p.terms()) {
    if (mono.degree() == 0)
      aug[0] = c;
    else
      aug[idx.position(mono) + 1] = c;
  }
  return HyperplaneForm::from_augmented(aug);
}

BivariatePolynomial polynomial_of(const HyperplaneForm& h, int d) {
  VeroneseIndex idx(d);
  if (h.ambient_dim() != idx.size()) throw PreconditionError("hyperplane dimension does not match degree");
  BivariatePolynomial p = BivariatePolynomial::constant(h.constant());
  const Vector& aug = h.augmented();
  for (std::size_t i = 0; i < idx.size(); ++i) p.add_term(idx.monomials()[i], aug[i + 1]);
  return p;
}

PlaneCurve tau_inverse(const HyperplaneForm& h, int d) { return PlaneCurve::from_polynomial(polynomial_of(h, d)); }

BivariatePolynomial pad_degree(const BivariatePolynomial& p, int d, const std::vector<PlanePoint>& avoid) {
  if (p.degree() < 1) throw PreconditionError("pad_degree needs a non-constant polynomial");
  if (p.degree() > d) throw PreconditionError("polynomial degree exceeds target degree");
  if (p.degree() == d) return p;
  Integer c = 0;
  while (std::any_of(avoid.begin(), avoid.end(), [&](const PlanePoint& a) { return a.x == c; })) ++c;
  return p * power(BivariatePolynomial::linear(1, 0, Rational(-c)), d - p.degree());
}

}  // namespace ordcurves
