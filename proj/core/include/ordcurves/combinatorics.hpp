#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ordcurves {

// Exact binomial coefficient; returns 0 when k < 0 or k > n. Throws on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Number of non-constant monomials of degree at most d: C(d+2,2) - 1.
inline std::size_t veronese_dim(int d) { return static_cast<std::size_t>(binomial(d + 2, 2) - 1); }

// Visits every k-subset of {0..n-1} in lexicographic order. The visitor returns
// false to stop early. Returns false iff stopped.
bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit);

std::vector<std::vector<std::size_t>> all_combinations(std::size_t n, std::size_t k);

// Indices of the set bits of mask, ascending.
std::vector<std::size_t> mask_members(std::uint64_t mask);

template <class T>
std::vector<T> select(const std::vector<T>& items, const std::vector<std::size_t>& idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(items[i]);
  return out;
}

}  // namespace ordcurves
