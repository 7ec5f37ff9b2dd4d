#include "doctest.h"
#include "ordcurves/errors.hpp"
#include "ordcurves/polynomial.hpp"

using namespace ordcurves;

namespace {

const BivariatePolynomial X = BivariatePolynomial::x();
const BivariatePolynomial Y = BivariatePolynomial::y();
BivariatePolynomial c(long v) { return BivariatePolynomial::constant(Rational(v)); }

bool same_curve(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.canonical() == b.canonical(); }

// Positive vectors m with sum m_i * deg_i <= d, counted by plain recursion.
std::uint64_t count_by_hand(const std::vector<int>& degs, std::size_t i, int budget) {
  if (i == degs.size()) return 1;
  std::uint64_t total = 0;
  for (int m = 1; m * degs[i] <= budget; ++m) total += count_by_hand(degs, i + 1, budget - m * degs[i]);
  return total;
}

}  // namespace

TEST_SUITE("bipoly") {
  TEST_CASE("evaluate") {
    CHECK((X + Y - c(1)).evaluate({1, 0}) == 0);
    CHECK((X * X + Y * Y).evaluate({0, 0}) == 0);
    CHECK((X * Y).evaluate({2, 3}) == 6);
    CHECK((X * X * Y - c(2)).evaluate({Rational(1, 2), 8}) == 0);
  }

  TEST_CASE("degree and leading term") {
    BivariatePolynomial p = X * X * Y + X * Y * Y + c(3);
    CHECK(p.degree() == 3);
    CHECK(BivariatePolynomial().degree() == -1);
    CHECK(p.leading_monomial() == Monomial{1, 2});
    CHECK((p.scaled(Rational(-2, 3))).canonical() == p.canonical());
  }

  TEST_CASE("text form round trip") {
    BivariatePolynomial p = X * X.scaled(Rational(1, 2)) - X * Y + c(7);
    std::string s = p.to_string();
    CHECK(BivariatePolynomial::parse(s) == p);
    CHECK((X + Y).to_string() == "1*x + 1*y");
    CHECK_THROWS_AS(BivariatePolynomial::parse("1*x^ + 2"), ParseError);
  }

  TEST_CASE("gcd examples") {
    CHECK(same_curve(poly_gcd(X * (X + Y), X * (Y - c(1))), X));
    CHECK(poly_gcd(X + Y, X - Y).degree() == 0);
    CHECK(same_curve(poly_gcd(power(X + Y, 2), (X + Y) * (X - c(1))), X + Y));
    CHECK(same_curve(poly_gcd(power(Y - X * X, 2) * (X + c(2)), (Y - X * X) * (Y + c(1))), Y - X * X));
  }

  TEST_CASE("exact division") {
    BivariatePolynomial a = X * X - Y, b = X * Y + c(3);
    CHECK(exact_divide(a * b, b) == a);
    CHECK_THROWS(exact_divide(a * b + c(1), b));
  }

  TEST_CASE("squarefree radical examples") {
    CHECK(same_curve(squarefree_radical(power(X + Y, 2)), X + Y));
    CHECK(same_curve(squarefree_radical(X * X * Y), X * Y));
    CHECK(same_curve(squarefree_radical(X + Y - c(1)), X + Y - c(1)));
    CHECK(same_curve(squarefree_radical(power(X - c(1), 3) * power(Y - X * X, 2) * (X + Y)),
                     (X - c(1)) * (Y - X * X) * (X + Y)));
  }

  TEST_CASE("sigma fiber count examples") {
    CHECK(sigma_fiber_count({1}, 2) == 2);
    CHECK(sigma_fiber_count({1, 1}, 3) == 3);
    CHECK(sigma_fiber_count({2}, 3) == 1);
    CHECK_THROWS_AS(sigma_fiber_count({0}, 2), PreconditionError);
  }

  TEST_CASE("sigma fiber count matches recursion and stays below d^d") {
    for (int d = 1; d <= 4; ++d) {
      std::uint64_t cap = 1;
      for (int i = 0; i < d; ++i) cap *= static_cast<std::uint64_t>(d);
      // every nonincreasing list of parts with sum <= d
      std::vector<std::vector<int>> lists{{}};
      for (std::size_t at = 0; at < lists.size(); ++at) {
        std::vector<int> l = lists[at];
        int sum = 0;
        for (int v : l) sum += v;
        for (int part = 1; part <= (l.empty() ? d : l.back()) && sum + part <= d; ++part) {
          auto next = l;
          next.push_back(part);
          lists.push_back(next);
        }
      }
      for (const auto& l : lists) {
        if (l.empty()) continue;
        CHECK(sigma_fiber_count(l, d) == count_by_hand(l, 0, d));
        CHECK(sigma_fiber_count(l, d) <= cap);
      }
    }
  }

  TEST_CASE("plane curves compare by radical") {
    PlaneCurve a = PlaneCurve::from_polynomial(power(X - Y, 2));
    PlaneCurve b = PlaneCurve::from_polynomial((X - Y).scaled(5));
    CHECK(a == b);
    CHECK(a.contains({3, 3}));
    CHECK_FALSE(a.contains({3, 2}));
    CHECK_THROWS_AS(PlaneCurve::from_polynomial(c(4)), PreconditionError);
  }
}
