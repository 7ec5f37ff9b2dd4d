#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ordcurves {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Accepts "p", "-p", "p/q" with decimal digits; q must be nonzero.
// Throws ParseError; the column reported is relative to the text.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

// Lexicographic comparison of equal-length vectors; shorter sorts first.
int compare(const Vector& a, const Vector& b);

struct VectorLess {
  bool operator()(const Vector& a, const Vector& b) const { return compare(a, b) < 0; }
};

bool is_zero(const Vector& v);

// Scales v so that its first nonzero entry is 1. Zero vectors are returned unchanged.
Vector normalize_leading(Vector v);

Rational dot(const Vector& a, const Vector& b);

// Smallest positive integer m such that m * v is integral.
Integer common_denominator(const Vector& v);

}  // namespace ordcurves
