#include "ordcurves/carrier.hpp"

#include <set>

#include "ordcurves/errors.hpp"

namespace ordcurves {

CarrierCurve CarrierCurve::power_graph(int k) {
  if (k < 1) throw PreconditionError("power graph exponent must be positive");
  CarrierCurve c;
  c.poly_ = (BivariatePolynomial::y() - BivariatePolynomial::monomial({k, 0})).canonical();
  c.description_ = "y = x^" + std::to_string(k);
  c.param_ = [k](const Rational& t) -> std::optional<PlanePoint> {
    Rational y = 1;
    for (int i = 0; i < k; ++i) y *= t;
    return PlanePoint{t, y};
  };
  return c;
}

CarrierCurve CarrierCurve::line(const Rational& a, const Rational& b, const Rational& c0) {
  if (sgn(a) == 0 && sgn(b) == 0) throw PreconditionError("degenerate line");
  CarrierCurve c;
  c.poly_ = BivariatePolynomial::linear(a, b, c0).canonical();
  c.description_ = "line " + c.poly_.to_string() + " = 0";
  c.param_ = [a, b, c0](const Rational& t) -> std::optional<PlanePoint> {
    if (sgn(b) != 0) return PlanePoint{t, (-c0 - a * t) / b};
    return PlanePoint{-c0 / a, t};
  };
  return c;
}

CarrierCurve CarrierCurve::conic_through(const BivariatePolynomial& q, const PlanePoint& p) {
  if (q.degree() != 2) throw PreconditionError("conic carrier needs a degree-2 polynomial");
  if (sgn(q.evaluate(p)) != 0) throw PreconditionError("base point is not on the conic");
  CarrierCurve c;
  c.poly_ = q.canonical();
  c.description_ = "conic " + c.poly_.to_string() + " = 0";
  BivariatePolynomial poly = c.poly_;
  // Substituting p + s(1, t) gives s(A s + B); the second intersection is s = -B/A.
  c.param_ = [poly, p](const Rational& t) -> std::optional<PlanePoint> {
    auto value = [&](const Rational& s) { return poly.evaluate({p.x + s, p.y + s * t}); };
    // value(s) = A s^2 + B s since value(0) = 0.
    Rational v1 = value(1), vm1 = value(-1);
    Rational a2 = (v1 + vm1) / 2;
    Rational b1 = (v1 - vm1) / 2;
    if (sgn(a2) == 0) return std::nullopt;
    Rational s = -b1 / a2;
    return PlanePoint{p.x + s, p.y + s * t};
  };
  return c;
}

Rational parameter_at(std::size_t i) {
  // Walk fractions p/q by increasing p + q, skipping non-reduced ones, with signs.
  if (i == 0) return 0;
  std::size_t k = i - 1;
  for (unsigned long total = 2;; ++total) {
    for (unsigned long num = total - 1; num >= 1; --num) {
      unsigned long den = total - num;
      Integer g;
      mpz_gcd_ui(g.get_mpz_t(), Integer(num).get_mpz_t(), den);
      if (g != 1) continue;
      if (k == 0) return Rational(static_cast<long>(num), den);
      if (k == 1) return Rational(-static_cast<long>(num), den);
      k -= 2;
    }
  }
}

std::vector<PlanePoint> CarrierCurve::sample(std::size_t count) const {
  std::vector<PlanePoint> out;
  std::set<PlanePoint> seen;
  for (std::size_t i = 0; out.size() < count; ++i) {
    if (i > 64 * count + 256) throw PreconditionError("could not sample enough points on " + description_);
    auto p = param_(parameter_at(i));
    if (!p) continue;
    if (sgn(poly_.evaluate(*p)) != 0) throw LemmaViolation("carrier parametrization left the curve");
    if (seen.insert(*p).second) out.push_back(*p);
  }
  return out;
}

}  // namespace ordcurves
