#include "ordcurves/oracle.hpp"

#include <algorithm>

#include "ordcurves/errors.hpp"
#include "ordcurves/nd_families.hpp"

namespace ordcurves {

namespace {

using Row = std::vector<mpq_class>;

// Exponent pairs (i, j) with i + j <= e.
std::vector<std::pair<int, int>> exponents(int e) {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s <= e; ++s)
    for (int i = s; i >= 0; --i) out.emplace_back(i, s - i);
  return out;
}

mpq_class ipow(const mpq_class& v, int k) {
  mpq_class r = 1;
  for (int i = 0; i < k; ++i) r *= v;
  return r;
}

Row monomial_row(const PlanePoint& p, int e) {
  Row r;
  for (auto [i, j] : exponents(e)) r.push_back(ipow(p.x, i) * ipow(p.y, j));
  return r;
}

// Gauss-Jordan in place; returns pivot columns.
std::vector<std::size_t> gauss_jordan(std::vector<Row>& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t k = r;
    while (k < m.size() && m[k][c] == 0) ++k;
    if (k == m.size()) continue;
    std::swap(m[r], m[k]);
    mpq_class inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::size_t row_rank(std::vector<Row> m, std::size_t cols) { return gauss_jordan(m, cols).size(); }

// Basis of the polynomials of degree <= e vanishing on pts, as coefficient rows.
std::vector<Row> kernel(const std::vector<PlanePoint>& pts, int e) {
  const std::size_t cols = exponents(e).size();
  std::vector<Row> m;
  for (const auto& p : pts) m.push_back(monomial_row(p, e));
  std::vector<std::size_t> piv = gauss_jordan(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (std::size_t c : piv) is_piv[c] = true;
  std::vector<Row> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(v);
  }
  return out;
}

mpq_class eval_row(const Row& coeffs, const PlanePoint& p, int e) {
  Row mono = monomial_row(p, e);
  mpq_class s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * mono[i];
  return s;
}

BivariatePolynomial to_polynomial(const Row& coeffs, int e) {
  BivariatePolynomial p;
  auto ex = exponents(e);
  for (std::size_t i = 0; i < ex.size(); ++i) p.add_term(Monomial{ex[i].first, ex[i].second}, coeffs[i]);
  return p;
}

// Affine dimension of the degree-e lifts of pts (-1 when empty).
long lift_dim(const std::vector<PlanePoint>& pts, int e) {
  std::vector<Row> m;
  for (const auto& p : pts) m.push_back(monomial_row(p, e));
  return static_cast<long>(row_rank(m, exponents(e).size())) - 1;
}

long choose2(long n) { return n * (n - 1) / 2; }

template <typename F>
void for_each_subset(std::size_t n, F&& f) {
  std::vector<std::size_t> idx;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    f(mask, idx);
  }
}

}  // namespace

std::set<BivariatePolynomial> oracle_determined(const std::vector<PlanePoint>& a, int d) {
  if (d < 1) throw PreconditionError("degree must be positive");
  if (a.size() > 24) throw PreconditionError("oracle is limited to 24 points");
  if (!kernel(a, d).empty()) throw PreconditionError("A lies on a curve of degree <= d");
  std::set<BivariatePolynomial> out;
  for_each_subset(a.size(), [&](std::uint64_t, const std::vector<std::size_t>& idx) {
    std::vector<PlanePoint> s;
    for (std::size_t i : idx) s.push_back(a[i]);
    std::vector<Row> ker = kernel(s, d);
    if (ker.size() != 1) return;
    // C1 = Z(g). Any C2 with C2 n A containing C1 n A has its equation in the kernel of C1 n A.
    std::vector<PlanePoint> trace;
    for (const auto& p : a)
      if (eval_row(ker[0], p, d) == 0) trace.push_back(p);
    std::vector<Row> ker_trace = kernel(trace, d);
    if (ker_trace.size() != 1) return;
    BivariatePolynomial g = to_polynomial(ker_trace[0], d);
    if (g.degree() != d) return;
    out.insert(squarefree_radical(g).canonical());
  });
  return out;
}

bool oracle_nd(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b, int d) {
  if (d < 2) throw PreconditionError("N_d membership needs d >= 2");
  const long c = choose2(d + 2);
  if (static_cast<long>(b.size()) != c - 3) throw PreconditionError("basis candidate must have C(d+2,2)-3 points");
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (b[i] == b[j]) throw PreconditionError("basis candidate contains duplicate points");
  for (const auto& p : b)
    if (!a.empty() && std::find(a.begin(), a.end(), p) == a.end()) throw PreconditionError("B is not a subset of A");

  if (lift_dim(b, d) != c - 4) return false;
  bool ok = true;
  for (int e = 1; e <= d - 1 && ok; ++e) {
    const long t = c - choose2(d - e + 2);
    const long target = choose2(d - e + 2) - 3;
    for_each_subset(b.size(), [&](std::uint64_t, const std::vector<std::size_t>& idx) {
      if (!ok) return;
      std::vector<PlanePoint> s, rest;
      std::vector<bool> in(b.size(), false);
      for (std::size_t i : idx) {
        s.push_back(b[i]);
        in[i] = true;
      }
      std::vector<Row> ker = kernel(s, e);
      if (ker.empty()) return;
      // S is a curve section of B iff no other point of B is forced onto every curve through S.
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (in[i]) continue;
        bool forced = std::all_of(ker.begin(), ker.end(), [&](const Row& g) { return eval_row(g, b[i], e) == 0; });
        if (forced) return;
        rest.push_back(b[i]);
      }
      const long k = static_cast<long>(s.size());
      const long dim_rest = lift_dim(rest, d - e);
      if (k >= t) ok = false;
      else if (k == t - 1 && dim_rest != target) ok = false;
      else if (k < t - 1 && dim_rest <= target) ok = false;
    });
  }
  return ok;
}

std::set<std::pair<int, BivariatePolynomial>> oracle_exceptional(const std::vector<PlanePoint>& b, int d) {
  if (b.size() > 24) throw PreconditionError("oracle is limited to 24 points");
  std::set<std::pair<int, BivariatePolynomial>> out;
  const long c = choose2(d + 2);
  for (int e = 1; e <= d - 1; ++e) {
    const std::size_t k = static_cast<std::size_t>(c - choose2(d - e + 2) - 1);
    for_each_subset(b.size(), [&](std::uint64_t, const std::vector<std::size_t>& idx) {
      if (idx.size() != k) return;
      std::vector<PlanePoint> s;
      for (std::size_t i : idx) s.push_back(b[i]);
      std::vector<Row> ker = kernel(s, e);
      if (ker.size() != 1) return;
      std::size_t hits = 0;
      for (const auto& p : b)
        if (eval_row(ker[0], p, e) == 0) ++hits;
      if (hits != k) return;
      BivariatePolynomial g = to_polynomial(ker[0], e);
      if (g.degree() == e) out.emplace(e, squarefree_radical(g).canonical());
    });
  }
  return out;
}

OracleReport check_determined(const std::string& instance, const PointConfiguration& a, unsigned workers) {
  std::set<BivariatePolynomial> oracle = oracle_determined(a.points(), a.d());
  std::set<BivariatePolynomial> main;
  for (const auto& dc : enumerate_determined(a, {workers}).curves) main.insert(dc.curve.radical());
  OracleReport r{instance, "determined_radicals", std::to_string(oracle.size()), std::to_string(main.size()),
                 oracle == main};
  return r;
}

OracleReport check_nd(const std::string& instance, const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b,
                      int d) {
  bool oracle = oracle_nd(a, b, d);
  bool main = nd_verify(a, b, d).member;
  return {instance, "nd_membership", oracle ? "true" : "false", main ? "true" : "false", oracle == main};
}

}  // namespace ordcurves
