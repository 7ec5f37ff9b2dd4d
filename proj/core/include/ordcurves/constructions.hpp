#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcurves/carrier.hpp"
#include "ordcurves/point.hpp"

namespace ordcurves {

enum class ConstructionKind { theorem6, theorem8, random_general, grid };

std::string to_string(ConstructionKind kind);
ConstructionKind parse_construction_kind(const std::string& text);

struct ConstructionRecipe {
  ConstructionKind kind = ConstructionKind::grid;
  int d = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::string> carrier;
  std::uint64_t seed = 0;
};

struct Certificate {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct ConstructionResult {
  std::vector<PlanePoint> points;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> partition;
  ConstructionRecipe recipe;
  std::vector<Certificate> certificates;
};

// A = B0 u B1: C(d+1,2) points off the line y = 0 on no curve of degree d-1,
// and the remaining m - C(d+1,2) points on that line.
ConstructionResult construct_theorem6(int d, std::size_t m, std::uint64_t seed);

// m - 1 points on the carrier whose lifts have every subset of at most
// C(d+2,2)-1 points affinely independent, plus one point off the carrier.
ConstructionResult construct_theorem8(int d, std::size_t n, std::size_t m, const CarrierCurve& carrier,
                                      std::uint64_t seed);

struct SampleParams {
  std::size_t count = 0;       // random_general: number of points
  std::size_t side = 0;        // grid: side length
  int genericity = 1;          // random_general: no C(g+2,2) points on a curve of degree <= g
  std::int64_t range = 0;      // random_general: coordinates in [-range, range]; 0 picks a default
  std::size_t budget = 20000;  // rejected candidates before giving up
};

ConstructionResult sample_configuration(ConstructionKind kind, const SampleParams& params, std::uint64_t seed);

}  // namespace ordcurves
