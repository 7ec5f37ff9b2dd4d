#include "ordcurves/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ordcurves/errors.hpp"

namespace ordcurves {

std::string to_string(const PlanePoint& p) { return "(" + p.x.get_str() + ", " + p.y.get_str() + ")"; }

bool has_duplicates(const std::vector<PlanePoint>& points) {
  std::set<PlanePoint> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) return true;
  return false;
}

std::vector<Monomial> monomials_up_to(int d, bool include_constant) {
  std::vector<Monomial> out;
  for (int k = include_constant ? 0 : 1; k <= d; ++k)
    for (int n = k; n >= 0; --n) out.push_back({n, k - n});
  return out;
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) { return monomial({0, 0}, c); }

BivariatePolynomial BivariatePolynomial::monomial(Monomial mono, const Rational& c) {
  BivariatePolynomial p;
  p.add_term(mono, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::linear(const Rational& a, const Rational& b, const Rational& c) {
  BivariatePolynomial p;
  p.add_term({1, 0}, a);
  p.add_term({0, 1}, b);
  p.add_term({0, 0}, c);
  return p;
}

int BivariatePolynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Rational BivariatePolynomial::coefficient(Monomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(Monomial mono, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational BivariatePolynomial::evaluate(const PlanePoint& p) const {
  Rational s = 0;
  for (const auto& [mono, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < mono.n; ++i) t *= p.x;
    for (int i = 0; i < mono.m; ++i) t *= p.y;
    s += t;
  }
  return s;
}

BivariatePolynomial BivariatePolynomial::derivative_x() const {
  BivariatePolynomial out;
  for (const auto& [mono, c] : terms_)
    if (mono.n > 0) out.add_term({mono.n - 1, mono.m}, c * mono.n);
  return out;
}

BivariatePolynomial BivariatePolynomial::derivative_y() const {
  BivariatePolynomial out;
  for (const auto& [mono, c] : terms_)
    if (mono.m > 0) out.add_term({mono.n, mono.m - 1}, c * mono.m);
  return out;
}

BivariatePolynomial BivariatePolynomial::scaled(const Rational& c) const {
  BivariatePolynomial out;
  if (sgn(c) == 0) return out;
  for (const auto& [mono, v] : terms_) out.terms_.emplace(mono, v * c);
  return out;
}

Rational BivariatePolynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Monomial BivariatePolynomial::leading_monomial() const {
  return terms_.empty() ? Monomial{0, 0} : terms_.rbegin()->first;
}

BivariatePolynomial BivariatePolynomial::canonical() const {
  if (terms_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& [mono, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [mono, c] : terms_) {
    Rational scaled = c * den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_num_mpz_t());
  }
  Rational factor(den, num);
  factor.canonicalize();
  if (sgn(leading_coefficient()) < 0) factor = -factor;
  return scaled(factor);
}

namespace {

void append_term(std::ostringstream& os, bool first, Monomial mono, const Rational& c) {
  Rational mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  os << mag.get_str();
  if (mono.n > 0) os << "*x" << (mono.n > 1 ? "^" + std::to_string(mono.n) : "");
  if (mono.m > 0) os << "*y" << (mono.m > 1 ? "^" + std::to_string(mono.m) : "");
}

}  // namespace

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first.n > b.first.n;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : items) {
    append_term(os, first, mono, c);
    first = false;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  BivariatePolynomial parse() {
    BivariatePolynomial out;
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [mono, c] = term();
      out.add_term(mono, c * sign);
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  int exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<Monomial, Rational> term() {
    Monomial mono;
    Rational c = 1;
    while (true) {
      skip_ws();
      char ch = peek();
      if (ch == 'x') {
        ++pos_;
        mono.n += exponent();
      } else if (ch == 'y') {
        ++pos_;
        mono.m += exponent();
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        try {
          c *= parse_rational(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), 1, start + e.column());
        }
      } else {
        fail("expected coefficient, x or y");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {mono, c};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial BivariatePolynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out = a;
  for (const auto& [mono, c] : b.terms()) out.add_term(mono, c);
  return out;
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out = a;
  for (const auto& [mono, c] : b.terms()) out.add_term(mono, -c);
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term({ma.n + mb.n, ma.m + mb.m}, ca * cb);
  return out;
}

bool operator<(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (Monomial mono : monomials_up_to(std::max(a.degree(), 0), true)) {
    int c = cmp(a.coefficient(mono), b.coefficient(mono));
    if (c != 0) return c < 0;
  }
  return false;
}

BivariatePolynomial power(const BivariatePolynomial& p, int k) {
  BivariatePolynomial out = BivariatePolynomial::constant(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

namespace {

// Univariate polynomials over Q in x, index = exponent, no trailing zeros.
using UPoly = std::vector<Rational>;
// Polynomials in y with coefficients in Q[x], index = y-exponent.
using YPoly = std::vector<UPoly>;

void trim(UPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}
void trim(YPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Returns (quotient, remainder).
std::pair<UPoly, UPoly> u_divmod(UPoly a, const UPoly& b) {
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly u_monic(UPoly a) {
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = u_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(std::move(a));
}

YPoly to_ypoly(const BivariatePolynomial& p) {
  YPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (out.size() <= static_cast<std::size_t>(mono.m)) out.resize(mono.m + 1);
    UPoly& u = out[mono.m];
    if (u.size() <= static_cast<std::size_t>(mono.n)) u.resize(mono.n + 1);
    u[mono.n] = c;
  }
  for (auto& u : out) trim(u);
  trim(out);
  return out;
}

BivariatePolynomial from_ypoly(const YPoly& a) {
  BivariatePolynomial out;
  for (std::size_t m = 0; m < a.size(); ++m)
    for (std::size_t n = 0; n < a[m].size(); ++n) out.add_term({static_cast<int>(n), static_cast<int>(m)}, a[m][n]);
  return out;
}

UPoly y_content(const YPoly& a) {
  UPoly g;
  for (const auto& c : a) g = u_gcd(g, c);
  return g;
}

YPoly y_primitive(YPoly a) {
  UPoly c = y_content(a);
  if (c.empty()) return a;
  for (auto& u : a)
    if (!u.empty()) u = u_divmod(u, c).first;
  return a;
}

// Pseudo-remainder of a by b with respect to y.
YPoly y_prem(YPoly a, const YPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& u : a) u = u_mul(u, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = u_sub(a[i + shift], u_mul(la, b[i]));
    trim(a);
  }
  return a;
}

}  // namespace

BivariatePolynomial poly_gcd(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  if (p.is_zero()) return q.canonical();
  if (q.is_zero()) return p.canonical();
  YPoly a = to_ypoly(p), b = to_ypoly(q);
  UPoly content = u_gcd(y_content(a), y_content(b));
  a = y_primitive(std::move(a));
  b = y_primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    YPoly r = y_prem(a, b);
    a = std::move(b);
    b = r.empty() ? r : y_primitive(std::move(r));
  }
  a = y_primitive(std::move(a));
  for (auto& u : a) u = u_mul(u, content);
  trim(a);
  return from_ypoly(a).canonical();
}

BivariatePolynomial exact_divide(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  BivariatePolynomial r = p, quotient;
  Monomial lq = q.leading_monomial();
  Rational cq = q.leading_coefficient();
  while (!r.is_zero()) {
    Monomial lr = r.leading_monomial();
    if (lr.n < lq.n || lr.m < lq.m) throw PreconditionError("polynomial is not divisible");
    Monomial shift{lr.n - lq.n, lr.m - lq.m};
    BivariatePolynomial t = BivariatePolynomial::monomial(shift, r.leading_coefficient() / cq);
    quotient = quotient + t;
    r = r - t * q;
  }
  return quotient;
}

BivariatePolynomial squarefree_radical(const BivariatePolynomial& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : BivariatePolynomial::constant(1);
  BivariatePolynomial g = poly_gcd(p, poly_gcd(p.derivative_x(), p.derivative_y()));
  return exact_divide(p, g).canonical();
}

namespace {

std::uint64_t count_vectors(const std::vector<int>& degrees, std::size_t i, int budget) {
  if (i == degrees.size()) return 1;
  std::uint64_t total = 0;
  for (int m = 1; m * degrees[i] <= budget; ++m) total += count_vectors(degrees, i + 1, budget - m * degrees[i]);
  return total;
}

}  // namespace

std::uint64_t sigma_fiber_count(const std::vector<int>& degrees, int d) {
  for (int deg : degrees)
    if (deg < 1) throw PreconditionError("component degrees must be positive");
  return count_vectors(degrees, 0, d);
}

PlaneCurve PlaneCurve::from_polynomial(const BivariatePolynomial& p) {
  if (p.degree() < 1) throw PreconditionError("a curve needs a non-constant polynomial");
  PlaneCurve c;
  c.representative_ = p.canonical();
  c.radical_ = squarefree_radical(p);
  return c;
}

}  // namespace ordcurves
