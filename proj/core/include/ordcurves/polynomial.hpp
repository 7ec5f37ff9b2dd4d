#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ordcurves/point.hpp"
#include "ordcurves/rational.hpp"

namespace ordcurves {

// Monomial x^n y^m.
struct Monomial {
  int n = 0;
  int m = 0;
  int degree() const { return n + m; }
  friend bool operator==(Monomial a, Monomial b) { return a.n == b.n && a.m == b.m; }
};

// Global monomial order: total degree ascending, then x-exponent descending.
// For degree 2 this gives 1, x, y, x^2, xy, y^2.
struct MonomialOrder {
  bool operator()(Monomial a, Monomial b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.n > b.n;
  }
};

// Monomials of degree 1..d (or 0..d) in the global order.
std::vector<Monomial> monomials_up_to(int d, bool include_constant);

class BivariatePolynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const Rational& c);
  static BivariatePolynomial monomial(Monomial mono, const Rational& c = 1);
  static BivariatePolynomial x() { return monomial({1, 0}); }
  static BivariatePolynomial y() { return monomial({0, 1}); }
  // a*x + b*y + c
  static BivariatePolynomial linear(const Rational& a, const Rational& b, const Rational& c);

  // Parses sums of terms "c*x^n*y^m"; c may be "p/q", factors may be omitted.
  static BivariatePolynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  Rational coefficient(Monomial mono) const;
  void add_term(Monomial mono, const Rational& c);

  Rational evaluate(const PlanePoint& p) const;
  BivariatePolynomial derivative_x() const;
  BivariatePolynomial derivative_y() const;
  BivariatePolynomial scaled(const Rational& c) const;

  // Scalar multiple with coprime integer coefficients and positive leading coefficient.
  BivariatePolynomial canonical() const;
  // Leading term is the greatest monomial in the global order.
  Rational leading_coefficient() const;
  Monomial leading_monomial() const;

  std::string to_string() const;

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const BivariatePolynomial& a, const BivariatePolynomial& b);

 private:
  Terms terms_;
};

BivariatePolynomial power(const BivariatePolynomial& p, int k);

// Greatest common divisor in Q[x,y], returned in canonical form. gcd(0,0) = 0.
BivariatePolynomial poly_gcd(const BivariatePolynomial& p, const BivariatePolynomial& q);

// Quotient p / q; throws PreconditionError if q does not divide p.
BivariatePolynomial exact_divide(const BivariatePolynomial& p, const BivariatePolynomial& q);

// p / gcd(p, p_x, p_y) in canonical form.
BivariatePolynomial squarefree_radical(const BivariatePolynomial& p);

// Number of positive integer vectors (m_1..m_k) with sum m_i * degrees_i <= d.
std::uint64_t sigma_fiber_count(const std::vector<int>& degrees, int d);

// Zero set of a non-constant polynomial. Two curves compare equal iff their
// squarefree radicals agree up to scalar.
class PlaneCurve {
 public:
  static PlaneCurve from_polynomial(const BivariatePolynomial& p);

  const BivariatePolynomial& representative() const { return representative_; }
  const BivariatePolynomial& radical() const { return radical_; }
  int degree() const { return representative_.degree(); }
  bool contains(const PlanePoint& p) const { return sgn(radical_.evaluate(p)) == 0; }

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) { return a.radical_ == b.radical_; }
  friend bool operator<(const PlaneCurve& a, const PlaneCurve& b) { return a.radical_ < b.radical_; }

 private:
  BivariatePolynomial representative_;
  BivariatePolynomial radical_;
};

}  // namespace ordcurves
