#include "brute.hpp"
#include "doctest.h"
#include "ordcurves/combinatorics.hpp"
#include "ordcurves/constructions.hpp"
#include "ordcurves/determined.hpp"
#include "ordcurves/errors.hpp"

using namespace ordcurves;

TEST_SUITE("constructions") {
  TEST_CASE("theorem6 construction at d=2, m=7") {
    ConstructionResult r = construct_theorem6(2, 7, 5);
    REQUIRE(r.points.size() == 7);
    REQUIRE(r.partition.size() == 2);
    CHECK(r.partition[0].second.size() == 3);
    CHECK(r.partition[1].second.size() == 4);
    for (std::size_t i : r.partition[0].second) CHECK(r.points[i].y != 0);
    for (std::size_t i : r.partition[1].second) CHECK(r.points[i].y == 0);
    std::vector<PlanePoint> b0;
    for (std::size_t i : r.partition[0].second) b0.push_back(r.points[i]);
    CHECK(brute::vanishing(b0, 1) == 0);
    CHECK(brute::vanishing(r.points, 2) == 0);
    CHECK_FALSE(contained_in_curve(r.points, 2).contained);
  }

  TEST_CASE("theorem6 construction hypotheses") {
    CHECK_THROWS_AS(construct_theorem6(1, 10, 0), PreconditionError);
    CHECK_THROWS_WITH_AS(construct_theorem6(2, 6, 0), doctest::Contains("m > max"), PreconditionError);
    CHECK_NOTHROW(construct_theorem6(3, 12, 0));
  }

  TEST_CASE("theorem8 construction at d=3, n=9, m=10") {
    ConstructionResult r = construct_theorem8(3, 9, 10, CarrierCurve::power_graph(3), 1);
    REQUIRE(r.points.size() == 10);
    CarrierCurve c0 = CarrierCurve::power_graph(3);
    CHECK_FALSE(c0.contains(r.points[0]));
    std::vector<PlanePoint> on(r.points.begin() + 1, r.points.end());
    for (const auto& p : on) CHECK(c0.contains(p));
    // every 9 carrier points impose independent conditions on cubics
    CHECK(brute::lift_dim(on, 3) == 8);
    for (std::size_t k = 1; k <= 9; ++k)
      for (const auto& idx : all_combinations(on.size(), k)) CHECK(brute::lift_dim(select(on, idx), 3) == static_cast<long>(k) - 1);
    CHECK(brute::vanishing(r.points, 3) == 0);
  }

  TEST_CASE("theorem8 construction hypotheses") {
    CarrierCurve c0 = CarrierCurve::power_graph(3);
    CHECK_THROWS_AS(construct_theorem8(3, 8, 10, c0, 0), PreconditionError);
    CHECK_THROWS_AS(construct_theorem8(3, 9, 9, c0, 0), PreconditionError);
    CHECK_THROWS_AS(construct_theorem8(2, 5, 6, c0, 0), PreconditionError);
  }

  TEST_CASE("grid sampler") {
    SampleParams g;
    g.side = 3;
    ConstructionResult r = sample_configuration(ConstructionKind::grid, g, 0);
    CHECK(r.points.size() == 9);
    std::set<PlanePoint> want;
    for (long i = 0; i <= 2; ++i)
      for (long j = 0; j <= 2; ++j) want.insert(brute::pt(i, j));
    CHECK(std::set<PlanePoint>(r.points.begin(), r.points.end()) == want);
  }

  TEST_CASE("random sampler is deterministic and certified") {
    SampleParams sp;
    sp.count = 8;
    sp.genericity = 2;
    auto a = sample_configuration(ConstructionKind::random_general, sp, 42);
    auto b = sample_configuration(ConstructionKind::random_general, sp, 42);
    CHECK(a.points == b.points);
    CHECK(a.points != sample_configuration(ConstructionKind::random_general, sp, 43).points);
    sp.genericity = 1;
    sp.count = 9;
    sp.range = 4;
    auto c = sample_configuration(ConstructionKind::random_general, sp, 7);
    REQUIRE(c.certificates.size() == 1);
    CHECK(c.certificates[0].holds);
    CHECK(brute::max_collinear(c.points) == 2);
    sp.count = 30;
    sp.range = 2;
    sp.budget = 50;
    CHECK_THROWS_AS(sample_configuration(ConstructionKind::random_general, sp, 1), PreconditionError);
  }

  TEST_CASE("kind names round trip") {
    for (auto k : {ConstructionKind::theorem6, ConstructionKind::theorem8, ConstructionKind::random_general,
                   ConstructionKind::grid})
      CHECK(parse_construction_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_construction_kind("spiral"), PreconditionError);
  }
}
