#pragma once

// Small brute-force references for tests. Written against gmpxx directly so
// that expected values do not come from the code under test.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ordcurves/point.hpp"

namespace brute {

using ordcurves::PlanePoint;

inline PlanePoint pt(long x, long y) { return {mpq_class(x), mpq_class(y)}; }

inline bool collinear(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) == 0;
}

// Lines spanned by pairs of A, each as the sorted set of incident indices.
inline std::set<std::vector<std::size_t>> lines(const std::vector<PlanePoint>& a) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      std::vector<std::size_t> on;
      for (std::size_t k = 0; k < a.size(); ++k)
        if (k == i || k == j || collinear(a[i], a[j], a[k])) on.push_back(k);
      out.insert(on);
    }
  return out;
}

inline std::size_t max_collinear(const std::vector<PlanePoint>& a) {
  std::size_t best = a.size() < 2 ? a.size() : 2;
  for (const auto& l : lines(a)) best = std::max(best, l.size());
  return best;
}

inline std::vector<mpq_class> monomials(const PlanePoint& p, int e, bool constant) {
  std::vector<mpq_class> row;
  for (int s = constant ? 0 : 1; s <= e; ++s)
    for (int i = s; i >= 0; --i) {
      mpq_class v = 1;
      for (int k = 0; k < i; ++k) v *= p.x;
      for (int k = 0; k < s - i; ++k) v *= p.y;
      row.push_back(v);
    }
  return row;
}

inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t k = r;
    while (k < m.size() && m[k][c] == 0) ++k;
    if (k == m.size()) continue;
    std::swap(m[r], m[k]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Affine dimension of the degree-e lifts (-1 for no points).
inline long lift_dim(const std::vector<PlanePoint>& pts, int e) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& p : pts) m.push_back(monomials(p, e, true));
  return static_cast<long>(rank(m)) - 1;
}

// Dimension of the degree <= e polynomials vanishing on pts.
inline std::size_t vanishing(const std::vector<PlanePoint>& pts, int e) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& p : pts) m.push_back(monomials(p, e, true));
  std::size_t cols = static_cast<std::size_t>((e + 1) * (e + 2) / 2);
  return cols - rank(m);
}

inline std::vector<PlanePoint> random_points(std::size_t count, long range, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<PlanePoint> seen;
  std::vector<PlanePoint> out;
  while (out.size() < count) {
    PlanePoint p = pt(static_cast<long>(rng() % (2 * range + 1)) - range, static_cast<long>(rng() % (2 * range + 1)) - range);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

inline long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace brute
