#include "ordcurves/nd_families.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "ordcurves/combinatorics.hpp"
#include "ordcurves/determined.hpp"
#include "ordcurves/errors.hpp"
#include "ordcurves/veronese.hpp"

namespace ordcurves {

std::size_t basis_size(int d) { return static_cast<std::size_t>(binomial(d + 2, 2) - 3); }

namespace {

long c2(long k) { return binomial(k + 2, 2); }

AffineFlat lifted_span(const std::vector<PlanePoint>& pts, int e) {
  return AffineFlat::span(veronese_dim(e), lift_all(pts, e));
}

void check_subset(const std::vector<PlanePoint>& b, const std::vector<PlanePoint>& dset) {
  std::set<PlanePoint> bs(b.begin(), b.end());
  for (const auto& p : dset)
    if (!bs.count(p)) throw PreconditionError("D must be a subset of B");
}

}  // namespace

NdQuantities nd_quantities(const std::vector<PlanePoint>& b, const std::vector<PlanePoint>& dset, int e, int d) {
  if (e < 1 || e > d - 1) throw PreconditionError("e must lie in [1, d-1]");
  check_subset(b, dset);
  NdQuantities q;
  q.e = e;
  q.v = lifted_span(dset, e);
  std::vector<PlanePoint> outside;
  for (const auto& p : b) {
    if (q.v.contains(lift(p, e)))
      ++q.gamma;
    else
      outside.push_back(p);
  }
  q.w = lifted_span(outside, d - e);
  q.alpha = c2(e) - 2 - q.v.dim();
  q.beta = c2(d - e) - 3 - q.w.dim();
  q.mu = q.alpha < 0 ? 0 : q.alpha + q.gamma + c2(d - e);
  const long t0 = c2(d) - c2(d - e) - 1;
  const long bsize = static_cast<long>(b.size());
  if (std::min(q.alpha, q.beta) < 0 || q.gamma > t0)
    q.tau = 0;
  else if (q.gamma == t0)
    q.tau = q.alpha + q.beta + bsize + 2;
  else
    q.tau = q.alpha + q.beta + bsize + 3;
  return q;
}

ForbiddenRegion::ForbiddenRegion(const std::vector<PlanePoint>& b, const std::vector<PlanePoint>& dset, int e, int d)
    : d_(d), e_(e), q_(nd_quantities(b, dset, e, d)) {
  vd_ = lifted_span(b, d);
  if (q_.alpha >= 0) ve_ = q_.v;
  if (q_.alpha >= 0 && q_.beta >= 0) w_ = q_.w;
}

bool ForbiddenRegion::contains(const PlanePoint& p) const {
  if (vd_.contains(lift(p, d_))) return true;
  if (ve_ && ve_->contains(lift(p, e_))) return true;
  if (w_ && w_->contains(lift(p, d_ - e_))) return true;
  return false;
}

bool forbidden_region_membership(const std::vector<PlanePoint>& b, const std::vector<PlanePoint>& dset, int e, int d,
                                 const PlanePoint& p) {
  return ForbiddenRegion(b, dset, e, d).contains(p);
}

std::vector<std::uint64_t> realizable_sections(const std::vector<PlanePoint>& b, int e) {
  const std::size_t k = b.size();
  if (k > 20) throw PreconditionError("section enumeration supports at most 20 points");
  std::vector<Vector> rows;
  for (const auto& p : b) rows.push_back(homogeneous_lift(p, e));
  const std::size_t cols = static_cast<std::size_t>(c2(e));
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::vector<std::size_t> rk(full + 1);
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    Matrix m(0, cols);
    for (std::size_t i : mask_members(mask)) m.append_row(rows[i]);
    rk[mask] = rank(m);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (rk[mask] == cols) continue;  // only the zero polynomial vanishes on S
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if (!(mask & bit) && rk[mask | bit] == rk[mask]) closed = false;
    }
    if (closed) out.push_back(mask);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) > std::popcount(y); });
  return out;
}

NdVerdict nd_verify(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b, int d) {
  if (d < 2) throw PreconditionError("N_d membership needs d >= 2");
  if (b.size() != basis_size(d)) throw PreconditionError("basis candidate must have C(d+2,2)-3 points");
  if (has_duplicates(b)) throw PreconditionError("basis candidate contains duplicate points");
  if (!a.empty()) check_subset(a, b);

  NdVerdict v;
  const long dim_i = lifted_span(b, d).dim();
  if (dim_i != c2(d) - 4) {
    v.failure = NdFailure{"i", 0, {}, dim_i, c2(d) - 4};
    return v;
  }
  for (int e = 1; e <= d - 1; ++e) {
    const long t = c2(d) - c2(d - e);
    const long target = c2(d - e) - 3;
    for (std::uint64_t mask : realizable_sections(b, e)) {
      const long k = std::popcount(mask);
      std::vector<std::size_t> section = mask_members(mask);
      if (k >= t) {
        v.failure = NdFailure{"ii", e, section, k, t};
        return v;
      }
      std::vector<PlanePoint> rest;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (!(mask & (std::uint64_t{1} << i))) rest.push_back(b[i]);
      const long dim_rest = lifted_span(rest, d - e).dim();
      if (k == t - 1 && dim_rest != target) {
        v.failure = NdFailure{"iii", e, section, dim_rest, target};
        return v;
      }
      if (k < t - 1 && dim_rest <= target) {
        v.failure = NdFailure{"iv", e, section, dim_rest, target};
        return v;
      }
    }
  }
  v.member = true;
  return v;
}

namespace {

struct PairState {
  int e;
  std::vector<PlanePoint> dset;
  ForbiddenRegion region;
};

// I(B, C0) with the forbidden region of every active pair. Without C0 every pair is active.
std::vector<PairState> active_pairs(const std::vector<PlanePoint>& b, int d, const std::vector<PlanePoint>& c0_sample,
                                    bool has_c0) {
  std::vector<PairState> out;
  const std::uint64_t full = (std::uint64_t{1} << b.size()) - 1;
  for (int e = 1; e <= d - 1; ++e) {
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      std::vector<PlanePoint> dset;
      for (std::size_t i : mask_members(mask)) dset.push_back(b[i]);
      ForbiddenRegion region(b, dset, e, d);
      if (has_c0) {
        // More than 2d^2 points of C0 in U force C0 inside U.
        bool all_inside = std::all_of(c0_sample.begin(), c0_sample.end(),
                                      [&](const PlanePoint& p) { return region.contains(p); });
        if (all_inside) continue;
      }
      out.push_back({e, std::move(dset), std::move(region)});
    }
  }
  return out;
}

long guard_value(const std::vector<PairState>& pairs) {
  long g = 0;
  for (const auto& p : pairs) g = std::max({g, p.region.quantities().tau, p.region.quantities().mu});
  return g;
}

}  // namespace

ChainResult grow_nd_chain(const std::vector<PlanePoint>& a, int d, const ChainOptions& opts) {
  if (d < 2) throw PreconditionError("chain growth needs d >= 2");
  if (has_duplicates(a)) throw PreconditionError("configuration contains duplicate points");
  const std::size_t target = basis_size(d);
  const long cap = binomial(d + 2, 2);
  std::set<PlanePoint> aset(a.begin(), a.end());
  for (const auto& p : opts.b0)
    if (!aset.count(p)) throw PreconditionError("B0 must be a subset of A");
  if (has_duplicates(opts.b0)) throw PreconditionError("B0 contains duplicate points");

  std::vector<PlanePoint> c0_sample;
  if (opts.c0) {
    const int f = d - opts.c0->polynomial().degree();
    if (f < 0) throw PreconditionError("C0 degree exceeds d");
    if (opts.b0.size() != static_cast<std::size_t>(binomial(f + 2, 2)))
      throw PreconditionError("B0 must have C(f+2,2) points where f = d - deg C0");
    for (const auto& p : opts.b0)
      if (opts.c0->contains(p)) throw PreconditionError("B0 must avoid C0");
    if (f >= 1 && contained_in_curve(opts.b0, f).contained)
      throw PreconditionError("B0 lies on a curve of degree <= f");
    c0_sample = opts.c0->sample(static_cast<std::size_t>(2 * d * d + 1));
  } else if (!opts.b0.empty()) {
    throw PreconditionError("without C0 the chain starts from the empty set");
  }

  std::vector<std::size_t> order = opts.order;
  if (order.empty())
    for (std::size_t i = 0; i < a.size(); ++i) order.push_back(i);
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  bool permutation = check.size() == a.size();
  for (std::size_t i = 0; i < check.size() && permutation; ++i) permutation = check[i] == i;
  if (!permutation) throw PreconditionError("order must be a permutation of A's indices");

  std::vector<PlanePoint> pool;
  for (std::size_t i : order)
    if (!opts.c0 || opts.c0->contains(a[i])) pool.push_back(a[i]);

  ChainResult result;
  std::vector<PlanePoint> b = opts.b0;
  if (b.size() > target) throw PreconditionError("B0 is larger than a basis");

  auto record = [&](std::optional<PlanePoint> chosen, std::size_t rejected, const std::vector<PairState>& pairs) {
    ChainStep s;
    s.size = b.size();
    s.chosen = std::move(chosen);
    s.active_pairs = pairs.size();
    s.max_guard = guard_value(pairs);
    s.rejected = rejected;
    s.guard_ok = s.max_guard < cap;
    if (!s.guard_ok) {
      result.guard_failures.push_back(result.steps.size());
      if (opts.strict_guard)
        throw LemmaViolation("growth guard max(tau, mu) = " + std::to_string(s.max_guard) + " at |B| = " +
                             std::to_string(b.size()));
    }
    result.steps.push_back(std::move(s));
  };

  std::vector<PairState> pairs = active_pairs(b, d, c0_sample, opts.c0.has_value());
  record(std::nullopt, 0, pairs);

  while (b.size() < target) {
    std::set<PlanePoint> in_b(b.begin(), b.end());
    AffineFlat vd = lifted_span(b, d);
    std::optional<PlanePoint> pick;
    std::size_t rejected = 0;
    for (const auto& cand : pool) {
      if (in_b.count(cand)) continue;
      bool forbidden = vd.contains(lift(cand, d)) ||
                       std::any_of(pairs.begin(), pairs.end(), [&](const PairState& ps) { return ps.region.contains(cand); });
      if (forbidden) {
        ++rejected;
        continue;
      }
      pick = cand;
      break;
    }
    if (!pick) {
      result.failure = "candidate pool exhausted at |B| = " + std::to_string(b.size()) + " after rejecting " +
                       std::to_string(rejected) + " candidates";
      result.basis = b;
      return result;
    }
    b.push_back(*pick);
    pairs = active_pairs(b, d, c0_sample, opts.c0.has_value());
    record(pick, rejected, pairs);
  }

  result.basis = b;
  NdVerdict verdict = nd_verify(a, b, d);
  if (!verdict.member) throw LemmaViolation("grown chain fails N_d condition " + verdict.failure->condition);
  result.success = true;
  return result;
}

std::vector<std::size_t> seeded_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  // Fisher-Yates on raw engine output keeps the permutation platform independent.
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  return order;
}

std::uint64_t count_spanning_subsets(const std::vector<PlanePoint>& a, int e) {
  if (e < 0) throw PreconditionError("e must be nonnegative");
  if (e == 0) return a.size();
  if (contained_in_curve(a, e).contained) throw PreconditionError("A lies on a curve of degree <= e");
  const std::size_t k = static_cast<std::size_t>(binomial(e + 2, 2));
  std::vector<Vector> rows;
  for (const auto& p : a) rows.push_back(homogeneous_lift(p, e));
  std::uint64_t count = 0;
  for_each_combination(a.size(), k, [&](const std::vector<std::size_t>& idx) {
    Matrix m(0, k);
    for (std::size_t i : idx) m.append_row(rows[i]);
    if (rank(m) == k) ++count;
    return true;
  });
  Integer scaled(static_cast<unsigned long>(count));
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1));
  if (scaled < static_cast<unsigned long>(a.size()))
    throw LemmaViolation("fewer spanning subsets than |A| / 2^(C(e+2,2)-1)");
  return count;
}

}  // namespace ordcurves
