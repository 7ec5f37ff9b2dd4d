#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordcurves/point.hpp"
#include "ordcurves/polynomial.hpp"

namespace ordcurves {

// Irreducible curve with a rational parametrization, used where rational points
// of a curve must be sampled.
class CarrierCurve {
 public:
  // y = x^k.
  static CarrierCurve power_graph(int k);
  // a*x + b*y + c = 0.
  static CarrierCurve line(const Rational& a, const Rational& b, const Rational& c);
  // Conic q through the rational point p, parametrized by lines through p.
  static CarrierCurve conic_through(const BivariatePolynomial& q, const PlanePoint& p);

  const BivariatePolynomial& polynomial() const { return poly_; }
  PlaneCurve curve() const { return PlaneCurve::from_polynomial(poly_); }
  const std::string& description() const { return description_; }
  bool contains(const PlanePoint& p) const { return sgn(poly_.evaluate(p)) == 0; }

  // The first `count` distinct rational points of a deterministic sequence on the curve.
  std::vector<PlanePoint> sample(std::size_t count) const;
  // Point at parameter t, if defined there.
  std::optional<PlanePoint> at(const Rational& t) const { return param_(t); }

 private:
  BivariatePolynomial poly_;
  std::string description_;
  std::function<std::optional<PlanePoint>(const Rational&)> param_;
};

// Parameter sequence 0, 1, -1, 2, -2, 1/2, -1/2, 3, ... enumerating Q.
Rational parameter_at(std::size_t i);

}  // namespace ordcurves
