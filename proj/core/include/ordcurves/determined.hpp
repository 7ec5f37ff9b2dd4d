#pragma once

#include <optional>
#include <vector>

#include "ordcurves/point.hpp"
#include "ordcurves/polynomial.hpp"
#include "ordcurves/veronese.hpp"

namespace ordcurves {

// Finite set of distinct rational points together with a working degree.
class PointConfiguration {
 public:
  // Throws PreconditionError on duplicate points or d < 1.
  PointConfiguration(std::vector<PlanePoint> points, int d);

  const std::vector<PlanePoint>& points() const { return points_; }
  int d() const { return d_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Vector>& lifted() const { return lifted_; }
  std::vector<Vector> homogeneous_rows() const;

 private:
  std::vector<PlanePoint> points_;
  int d_;
  std::vector<Vector> lifted_;
};

struct CurveWitness {
  bool contained = false;
  std::optional<BivariatePolynomial> witness;  // a degree <= e polynomial vanishing on all points
};

// Whether the points lie on a common curve of degree <= e.
CurveWitness contained_in_curve(const std::vector<PlanePoint>& points, int e);

// Dimension of the space of polynomials of degree <= e (constant included)
// vanishing at every point.
std::size_t vanishing_dimension(const std::vector<PlanePoint>& points, int e);

struct DeterminedCurve {
  PlaneCurve curve;
  std::vector<std::size_t> incidence;         // indices into the configuration, ascending
  std::vector<HyperplaneForm> hyperplanes;    // spanned hyperplanes pulling back to the curve
};

struct DeterminedCurveSet {
  int d = 0;
  std::optional<std::size_t> n;               // incidence cap for ordinary sets
  std::vector<DeterminedCurve> curves;        // ordered by first generating hyperplane
};

struct EnumerationOptions {
  unsigned workers = 1;
};

// All degree-d curves determined by A, via hyperplanes spanned by psi_d(A).
// Throws PreconditionError if A lies on a curve of degree <= d.
DeterminedCurveSet enumerate_determined(const PointConfiguration& a, const EnumerationOptions& opts = {});

// Determined curves meeting A in at most n points. Empty for every A when n < C(d+2,2) - 1;
// otherwise throws PreconditionError if A lies on a curve of degree <= d.
DeterminedCurveSet ordinary_curves(const PointConfiguration& a, std::size_t n, const EnumerationOptions& opts = {});
DeterminedCurveSet restrict_to_ordinary(const DeterminedCurveSet& all, std::size_t n);

struct Richness {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // indices of a maximizing subset
};

// Largest number of points of A on a single curve of degree <= e.
Richness max_curve_richness(const std::vector<PlanePoint>& points, int e, const EnumerationOptions& opts = {});

struct RegularityReport {
  bool is_regular = false;
  Rational ratio;
  Rational threshold;
  Richness witness;
};

// 1 / 2^(2^(3d+8)).
Rational default_regularity_threshold(int d);

RegularityReport regularity_report(const std::vector<PlanePoint>& points, int d,
                                   const std::optional<Rational>& threshold = std::nullopt,
                                   const EnumerationOptions& opts = {});

}  // namespace ordcurves
