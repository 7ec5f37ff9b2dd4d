#include "ordcurves/rational.hpp"

#include <cctype>

#include "ordcurves/errors.hpp"

namespace ordcurves {

namespace {

// Returns the index one past the digit run starting at pos; throws if empty.
std::size_t scan_digits(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  if (end == pos) {
    throw ParseError("expected digits in rational '" + std::string(text) + "'", 0, pos + 1);
  }
  return end;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t num_end = scan_digits(text, pos);
  Integer num(std::string(text.substr(pos, num_end - pos)));
  Integer den = 1;
  pos = num_end;
  if (pos < text.size()) {
    if (text[pos] != '/') {
      throw ParseError("unexpected character in rational '" + std::string(text) + "'", 0, pos + 1);
    }
    ++pos;
    std::size_t den_end = scan_digits(text, pos);
    den = Integer(std::string(text.substr(pos, den_end - pos)));
    if (den == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'", 0, pos + 1);
    if (den_end != text.size()) {
      throw ParseError("trailing characters in rational '" + std::string(text) + "'", 0, den_end + 1);
    }
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

int compare(const Vector& a, const Vector& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector normalize_leading(Vector v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) {
      Rational lead = v[i];
      for (std::size_t j = i; j < v.size(); ++j) v[j] /= lead;
      break;
    }
  }
  return v;
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer common_denominator(const Vector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace ordcurves
