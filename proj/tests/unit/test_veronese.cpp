#include "brute.hpp"
#include "doctest.h"
#include "ordcurves/errors.hpp"
#include "ordcurves/veronese.hpp"

using namespace ordcurves;

namespace {

const BivariatePolynomial X = BivariatePolynomial::x();
const BivariatePolynomial Y = BivariatePolynomial::y();
BivariatePolynomial c(long v) { return BivariatePolynomial::constant(Rational(v)); }

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_SUITE("veronese") {
  TEST_CASE("lift examples") {
    CHECK(lift({1, 2}, 2) == vec({1, 2, 1, 2, 4}));
    CHECK(lift({0, 0}, 3) == Vector(9, Rational(0)));
    CHECK(lift({2, 3}, 1) == vec({2, 3}));
    CHECK(homogeneous_lift({1, 2}, 1) == vec({1, 1, 2}));
  }

  TEST_CASE("index positions follow degree then x-exponent") {
    VeroneseIndex idx(3);
    CHECK(idx.size() == 9);
    CHECK(idx.position({1, 0}) == 0);
    CHECK(idx.position({0, 1}) == 1);
    CHECK(idx.position({2, 0}) == 2);
    CHECK(idx.position({0, 3}) == 8);
  }

  TEST_CASE("tau examples") {
    CHECK(tau(X + Y - c(1), 1).augmented() == vec({1, -1, -1}));
    CHECK(tau(X + Y - c(1), 2).augmented() == vec({1, -1, -1, 0, 0, 0}));
    CHECK(tau(X * Y - c(1), 2).augmented() == vec({1, 0, 0, 0, -1, 0}));
    CHECK_THROWS_AS(tau(X * X, 1), PreconditionError);
  }

  TEST_CASE("tau_inverse examples") {
    BivariatePolynomial p = X + Y - c(1);
    CHECK(tau_inverse(tau(p, 2), 2).radical() == squarefree_radical(p));
    PlaneCurve two_lines = tau_inverse(HyperplaneForm::from_augmented(vec({-1, 0, 0, 1, 0, 0})), 2);
    CHECK(two_lines == PlaneCurve::from_polynomial(X * X - c(1)));
    PlaneCurve parabola = tau_inverse(HyperplaneForm::from_augmented(vec({0, 0, 1, -1, 0, 0})), 2);
    CHECK(parabola == PlaneCurve::from_polynomial(Y - X * X));
  }

  TEST_CASE("hyperplane membership matches curve membership") {
    BivariatePolynomial p = Y * Y - X * X * X + X;
    HyperplaneForm h = tau(p, 3);
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y) {
        PlanePoint q{x, y};
        CHECK(h.contains(lift(q, 3)) == (p.evaluate(q) == 0));
      }
  }

  TEST_CASE("pad_degree examples") {
    CHECK(pad_degree(X + Y, 1, {}) == X + Y);
    BivariatePolynomial padded = pad_degree(X + Y, 2, {{0, 0}});
    CHECK(padded.canonical() == ((X + Y) * (X - c(1))).canonical());
    std::vector<PlanePoint> avoid = brute::random_points(5, 4, 3);
    BivariatePolynomial q = X * X + Y - c(2);
    BivariatePolynomial r = pad_degree(q, 4, avoid);
    CHECK(r.degree() == 4);
    for (const auto& a : avoid) CHECK((r.evaluate(a) == 0) == (q.evaluate(a) == 0));
  }
}
