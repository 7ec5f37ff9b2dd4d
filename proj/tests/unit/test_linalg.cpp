#include "brute.hpp"
#include "doctest.h"
#include "ordcurves/errors.hpp"
#include "ordcurves/linalg.hpp"
#include "ordcurves/rational.hpp"

using namespace ordcurves;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows, std::size_t cols) {
  std::vector<Vector> rs;
  for (auto r : rows) {
    Vector v;
    for (long x : r) v.push_back(Rational(x));
    rs.push_back(v);
  }
  return Matrix::from_rows(rs, cols);
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(to_string(parse_rational("4/6")) == "2/3");
  }

  TEST_CASE("parse_rational rejects malformed text with a column") {
    CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2x"), ParseError);
    try {
      parse_rational("12/0");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 4);
    }
  }

  TEST_CASE("rank examples") {
    CHECK(rank(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)) == 3);
    CHECK(rank(mat({{1, 2}, {1, 2}}, 2)) == 1);
    CHECK(rank(mat({{1, 0}, {0, 1}, {1, 1}}, 2)) == 2);
    CHECK(rank(Matrix(0, 4)) == 0);
  }

  TEST_CASE("nullspace examples") {
    auto k = nullspace(mat({{1, 1}}, 2));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] + k[0][1] == 0);
    CHECK(!is_zero(k[0]));
    CHECK(nullspace(mat({{2, 1}, {1, 1}}, 2)).empty());
    CHECK(nullspace(mat({{0, 0, 0}, {0, 0, 0}}, 3)).size() == 3);
  }

  TEST_CASE("rank and nullspace agree with an independent elimination") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
      std::vector<Vector> rs;
      std::vector<std::vector<mpq_class>> raw;
      for (std::size_t i = 0; i < rows; ++i) {
        Vector v;
        for (std::size_t j = 0; j < cols; ++j) {
          Rational r(static_cast<long>(rng() % 5) - 2, 1 + rng() % 3);
          r.canonicalize();
          v.push_back(r);
        }
        if (i > 0 && rng() % 3 == 0)
          for (std::size_t j = 0; j < cols; ++j) v[j] = rs[0][j] * 2;
        rs.push_back(v);
        raw.emplace_back(v.begin(), v.end());
      }
      Matrix m = Matrix::from_rows(rs, cols);
      const std::size_t r = brute::rank(raw);
      CHECK(rank(m) == r);
      auto ker = nullspace(m);
      CHECK(ker.size() == cols - r);
      for (const auto& v : ker)
        for (const auto& row : rs) CHECK(dot(row, v) == 0);
    }
  }

  TEST_CASE("flat span and dimension") {
    CHECK(AffineFlat::span(2, {}).dim() == -1);
    CHECK(AffineFlat::span(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})}).dim() == 2);
    AffineFlat diag = AffineFlat::span(2, {vec({0, 0}), vec({1, 1}), vec({2, 2})});
    CHECK(diag.dim() == 1);
    REQUIRE(diag.directions().size() == 1);
    CHECK(diag.directions()[0][0] == diag.directions()[0][1]);
  }

  TEST_CASE("flat membership") {
    AffineFlat diag = AffineFlat::span(2, {vec({0, 0}), vec({1, 1})});
    CHECK(diag.contains(vec({2, 2})));
    CHECK_FALSE(diag.contains(vec({1, 0})));
    CHECK_FALSE(AffineFlat::empty(2).contains(vec({0, 0})));
  }

  TEST_CASE("join, intersection and equations") {
    AffineFlat xaxis = AffineFlat::span(3, {vec({0, 0, 0}), vec({1, 0, 0})});
    AffineFlat yaxis = AffineFlat::span(3, {vec({0, 0, 0}), vec({0, 1, 0})});
    CHECK(xaxis.join(vec({0, 1, 0})).dim() == 2);
    CHECK(xaxis.join(vec({5, 0, 0})).dim() == 1);
    CHECK(xaxis.intersect(yaxis).dim() == 0);
    AffineFlat shifted = AffineFlat::span(3, {vec({0, 0, 1}), vec({1, 0, 1})});
    CHECK(xaxis.intersect(shifted).is_empty());
    CHECK(xaxis.join(vec({0, 0, 1})).contains(vec({3, 0, 1})));
    AffineFlat plane = AffineFlat::span(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
    auto eqs = plane.equations();
    REQUIRE(eqs.size() == 1);
    CHECK(plane.contains(vec({2, -1, 0})));
    CHECK(plane == AffineFlat::span(3, {vec({2, -1, 0}), vec({0, 0, 1}), vec({0, 1, 0})}));
  }

  TEST_CASE("affine_dim matches span dimension") {
    CHECK(affine_dim({vec({1, 2}), vec({2, 4}), vec({3, 6})}) == 1);
    CHECK(affine_dim({}) == -1);
  }
}
