#include "brute.hpp"
#include "doctest.h"
#include "ordcurves/combinatorics.hpp"
#include "ordcurves/errors.hpp"
#include "ordcurves/nd_families.hpp"
#include "ordcurves/oracle.hpp"

using namespace ordcurves;
using brute::pt;

namespace {

struct Expected {
  long v, w, alpha, beta, gamma, mu, tau;
};

// The section-3 quantities recomputed from their definitions.
Expected by_definition(const std::vector<PlanePoint>& b, const std::vector<PlanePoint>& dset, int e, int d) {
  Expected x{};
  x.v = brute::lift_dim(dset, e);
  std::vector<PlanePoint> outside;
  for (const auto& p : b) {
    auto with = dset;
    with.push_back(p);
    if (!dset.empty() && brute::lift_dim(with, e) == x.v)
      ++x.gamma;
    else
      outside.push_back(p);
  }
  x.w = brute::lift_dim(outside, d - e);
  x.alpha = brute::binom(e + 2, 2) - 2 - x.v;
  x.beta = brute::binom(d - e + 2, 2) - 3 - x.w;
  x.mu = x.alpha < 0 ? 0 : x.alpha + x.gamma + brute::binom(d - e + 2, 2);
  const long t0 = brute::binom(d + 2, 2) - brute::binom(d - e + 2, 2) - 1;
  const long nb = static_cast<long>(b.size());
  if (std::min(x.alpha, x.beta) < 0 || x.gamma > t0)
    x.tau = 0;
  else if (x.gamma == t0)
    x.tau = x.alpha + x.beta + nb + 2;
  else
    x.tau = x.alpha + x.beta + nb + 3;
  return x;
}

const std::vector<PlanePoint> kTriangle = {pt(0, 0), pt(1, 0), pt(0, 1)};

}  // namespace

TEST_SUITE("nd") {
  TEST_CASE("quantities for empty D") {
    NdQuantities q = nd_quantities(kTriangle, {}, 1, 2);
    CHECK(q.v.dim() == -1);
    CHECK(q.alpha == 2);
    CHECK(q.gamma == 0);
  }

  TEST_CASE("quantities for a single point") {
    NdQuantities q = nd_quantities(kTriangle, {kTriangle[0]}, 1, 2);
    CHECK(q.v.dim() == 0);
    CHECK(q.alpha == 1);
    CHECK(q.gamma == 1);
    CHECK_THROWS_AS(nd_quantities(kTriangle, {pt(5, 5)}, 1, 2), PreconditionError);
    CHECK_THROWS_AS(nd_quantities(kTriangle, {}, 2, 2), PreconditionError);
  }

  TEST_CASE("quantities match the definitions at d=3") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      auto b = brute::random_points(7, seed % 2 ? 2 : 30, seed);
      for (int e = 1; e <= 2; ++e) {
        for (const auto& idx : all_combinations(7, 2)) {
          auto dset = select(b, idx);
          NdQuantities q = nd_quantities(b, dset, e, 3);
          Expected x = by_definition(b, dset, e, 3);
          CHECK(q.v.dim() == x.v);
          CHECK(q.w.dim() == x.w);
          CHECK(q.alpha == x.alpha);
          CHECK(q.beta == x.beta);
          CHECK(q.gamma == x.gamma);
          CHECK(q.mu == x.mu);
          CHECK(q.tau == x.tau);
        }
      }
    }
  }

  TEST_CASE("forbidden region") {
    for (const auto& b : kTriangle) CHECK(forbidden_region_membership(kTriangle, {kTriangle[0]}, 1, 2, b));
    // alpha < 0: three non-collinear points at e=1 give dim V = 2, alpha = -1.
    ForbiddenRegion full(kTriangle, kTriangle, 1, 2);
    CHECK(full.quantities().alpha < 0);
    CHECK(full.parts() == 1);
    // One point of D: U adds the pullback of that point and of W.
    ForbiddenRegion one(kTriangle, {kTriangle[0]}, 1, 2);
    std::optional<PlanePoint> outside;
    for (const auto& p : brute::random_points(40, 6, 9)) {
      if (!one.contains(p)) {
        outside = p;
        break;
      }
    }
    REQUIRE(outside);
    CHECK(*outside != kTriangle[0]);
  }

  TEST_CASE("nd_verify examples") {
    CHECK(nd_verify({}, kTriangle, 2).member);
    NdVerdict col = nd_verify({}, {pt(0, 0), pt(1, 0), pt(2, 0)}, 2);
    CHECK_FALSE(col.member);
    REQUIRE(col.failure);
    CHECK(col.failure->condition == "ii");
    CHECK_THROWS_AS(nd_verify({}, {pt(0, 0), pt(0, 0), pt(1, 1)}, 2), PreconditionError);
    CHECK_THROWS_AS(nd_verify({}, {pt(0, 0), pt(1, 1)}, 2), PreconditionError);
  }

  TEST_CASE("nd_verify agrees with the oracle") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto a = brute::random_points(8, 2, seed);
      for (const auto& idx : all_combinations(8, 3)) {
        auto b = select(a, idx);
        CHECK(nd_verify(a, b, 2).member == oracle_nd(a, b, 2));
      }
    }
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto a = brute::random_points(9, 2, 50 + seed);
      std::mt19937_64 rng(seed);
      for (int k = 0; k < 10; ++k) {
        std::vector<std::size_t> idx(9);
        for (std::size_t i = 0; i < 9; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(7);
        auto b = select(a, idx);
        CHECK(nd_verify(a, b, 3).member == oracle_nd(a, b, 3));
      }
    }
  }

  TEST_CASE("realizable sections of a triangle") {
    auto secs = realizable_sections(kTriangle, 1);
    // empty set, three singletons, three pairs
    CHECK(secs.size() == 7);
    CHECK(std::popcount(secs.front()) == 2);
  }

  TEST_CASE("chain grower without a carrier") {
    auto a = brute::random_points(8, 40, 4);
    ChainOptions co;
    co.order = seeded_order(a.size(), 4);
    ChainResult r = grow_nd_chain(a, 2, co);
    REQUIRE(r.success);
    CHECK(r.basis.size() == 3);
    CHECK(nd_verify(a, r.basis, 2).member);
    CHECK(oracle_nd(a, r.basis, 2));
    CHECK(r.steps.size() == 4);
  }

  TEST_CASE("chain grower along y = x^3") {
    CarrierCurve c0 = CarrierCurve::power_graph(3);
    std::vector<PlanePoint> a = c0.sample(10);
    PlanePoint off = pt(0, 1);
    a.push_back(off);
    ChainOptions co;
    co.b0 = {off};
    co.c0 = c0;
    ChainResult r = grow_nd_chain(a, 3, co);
    REQUIRE(r.success);
    CHECK(r.basis.size() == 7);
    for (const auto& p : r.basis)
      if (p != off) CHECK(c0.contains(p));
    CHECK(nd_verify(a, r.basis, 3).member);
  }

  TEST_CASE("chain grower on a set that is too small") {
    ChainResult r = grow_nd_chain({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)}, 3);
    CHECK_FALSE(r.success);
    CHECK_FALSE(r.failure.empty());
  }

  TEST_CASE("growth guard at d=2 reaches 6 while B has at most two points") {
    auto a = brute::random_points(10, 40, 12);
    ChainOptions co;
    co.order = seeded_order(a.size(), 12);
    ChainResult r = grow_nd_chain(a, 2, co);
    REQUIRE(r.success);
    REQUIRE(r.steps.size() == 4);
    CHECK(r.steps[0].max_guard == 6);
    CHECK(r.steps[3].max_guard == 5);
    CHECK(r.guard_failures == std::vector<std::size_t>{0, 1, 2});
    co.strict_guard = true;
    CHECK_THROWS_AS(grow_nd_chain(a, 2, co), LemmaViolation);
  }

  TEST_CASE("growth guard holds at every step for d=3") {
    auto a = brute::random_points(12, 40, 3);
    ChainOptions co;
    co.order = seeded_order(a.size(), 3);
    ChainResult r = grow_nd_chain(a, 3, co);
    REQUIRE(r.success);
    CHECK(r.guard_failures.empty());
  }

  TEST_CASE("seeded order is a deterministic permutation") {
    auto p = seeded_order(9, 77);
    CHECK(p == seeded_order(9, 77));
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < 9; ++i) CHECK(sorted[i] == i);
  }

  TEST_CASE("spanning subset counts") {
    CHECK(count_spanning_subsets({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)}, 1) == 4);
    CHECK(count_spanning_subsets({pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)}, 1) == 3);
    CHECK(count_spanning_subsets({pt(0, 0), pt(1, 0), pt(2, 0)}, 0) == 3);
    CHECK_THROWS_AS(count_spanning_subsets({pt(0, 0), pt(1, 0), pt(2, 0)}, 1), PreconditionError);
  }
}
