#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordcurves/determined.hpp"
#include "ordcurves/point.hpp"
#include "ordcurves/polynomial.hpp"

namespace ordcurves {

// Brute-force reference implementations. They share no linear algebra with the
// main modules and never mention hyperplanes.

// Radicals of all degree-d curves determined by A, straight from the definition.
// Throws PreconditionError if A lies on a curve of degree <= d.
std::set<BivariatePolynomial> oracle_determined(const std::vector<PlanePoint>& a, int d);

// N_d membership of B by an independent section enumeration; B need not be a subset of a
// when a is empty. Throws PreconditionError on a size mismatch.
bool oracle_nd(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b, int d);

// (e, radical) for every degree-e curve meeting B in exactly C(d+2,2)-C(d-e+2,2)-1 points
// whose section has a one-dimensional vanishing space.
std::set<std::pair<int, BivariatePolynomial>> oracle_exceptional(const std::vector<PlanePoint>& b, int d);

struct OracleReport {
  std::string instance;
  std::string quantity;
  std::string oracle_value;
  std::string main_value;
  bool agree = false;
};

OracleReport check_determined(const std::string& instance, const PointConfiguration& a, unsigned workers = 1);
OracleReport check_nd(const std::string& instance, const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b,
                      int d);

}  // namespace ordcurves
