#include "brute.hpp"
#include "doctest.h"
#include "ordcurves/errors.hpp"
#include "ordcurves/oracle.hpp"

using namespace ordcurves;
using brute::pt;

TEST_SUITE("oracle") {
  TEST_CASE("determined lines of four general points") {
    auto r = oracle_determined({pt(0, 0), pt(1, 0), pt(0, 1), pt(3, 7)}, 1);
    CHECK(r.size() == 6);
    CHECK(r.size() == brute::lines({pt(0, 0), pt(1, 0), pt(0, 1), pt(3, 7)}).size());
    CHECK_THROWS_AS(oracle_determined({pt(0, 0), pt(1, 1), pt(2, 2)}, 1), PreconditionError);
  }

  TEST_CASE("determined lines with a rich line") {
    std::vector<PlanePoint> a = {pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0), pt(0, 1), pt(1, 1)};
    CHECK(oracle_determined(a, 1).size() == brute::lines(a).size());
  }

  TEST_CASE("nd membership") {
    CHECK(oracle_nd({}, {pt(0, 0), pt(1, 0), pt(0, 1)}, 2));
    CHECK_FALSE(oracle_nd({}, {pt(0, 0), pt(1, 0), pt(2, 0)}, 2));
    CHECK_THROWS_AS(oracle_nd({}, {pt(0, 0), pt(1, 0)}, 2), PreconditionError);
    CHECK_THROWS_AS(oracle_nd({pt(0, 0)}, {pt(0, 0), pt(1, 0), pt(0, 1)}, 2), PreconditionError);
  }

  TEST_CASE("reports") {
    std::vector<PlanePoint> a = {pt(0, 0), pt(1, 0), pt(0, 1), pt(3, 7), pt(5, -2)};
    OracleReport r = check_determined("five", PointConfiguration(a, 1), 2);
    CHECK(r.agree);
    CHECK(r.oracle_value == r.main_value);
    CHECK(r.instance == "five");
    OracleReport n = check_nd("five", a, {a[0], a[1], a[2]}, 2);
    CHECK(n.agree);
    CHECK(n.oracle_value == "true");
  }
}
