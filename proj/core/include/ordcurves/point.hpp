#pragma once

#include <vector>

#include "ordcurves/rational.hpp"

namespace ordcurves {

struct PlanePoint {
  Rational x;
  Rational y;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const PlanePoint& a, const PlanePoint& b) {
    int c = cmp(a.x, b.x);
    return c != 0 ? c < 0 : a.y < b.y;
  }
};

std::string to_string(const PlanePoint& p);

// True iff some point occurs twice.
bool has_duplicates(const std::vector<PlanePoint>& points);

}  // namespace ordcurves
