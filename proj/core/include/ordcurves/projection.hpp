#pragma once

#include <string>
#include <vector>

#include "ordcurves/determined.hpp"
#include "ordcurves/linalg.hpp"
#include "ordcurves/point.hpp"
#include "ordcurves/polynomial.hpp"

namespace ordcurves {

// Point of a projective space, stored with first nonzero coordinate 1.
// Also used for lines of P^2 via their coefficient vectors.
class ProjectivePoint {
 public:
  // Throws PreconditionError on the zero vector.
  explicit ProjectivePoint(Vector coords);
  const Vector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) { return compare(a.coords_, b.coords_) < 0; }

 private:
  Vector coords_;
};

using ProjectiveLine = ProjectivePoint;

Vector cross(const Vector& u, const Vector& v);

// Projection of Q^N from a flat F onto P^(codim F - 1):
// z -> [l_0(1,z) : ... : l_k(1,z)] for a basis l_i of the forms vanishing on F^h.
class HyperprojectionMap {
 public:
  // Throws PreconditionError for an empty flat or a hyperplane.
  explicit HyperprojectionMap(const AffineFlat& center);

  const AffineFlat& center() const { return center_; }
  const std::vector<Vector>& forms() const { return forms_; }
  std::size_t target_dim() const { return forms_.size() - 1; }

  // Throws PreconditionError("projection center") when z lies in F.
  ProjectivePoint project(const Vector& z) const;
  // Augmented hyperplane form sum c_i l_i for a hyperplane c of the target space.
  Vector pullback(const Vector& c) const;
  // Coordinates c with form = sum c_i l_i; throws LemmaViolation if form does not vanish on F^h.
  Vector coordinates_of(const Vector& form) const;

 private:
  AffineFlat center_;
  std::vector<Vector> forms_;
};

ProjectivePoint hyperproject(const HyperprojectionMap& map, const Vector& z);

struct ExceptionalCurve {
  int e = 0;
  PlaneCurve curve;
  BivariatePolynomial polynomial;            // degree-e generator through the section
  std::vector<std::size_t> section;          // indices into B
  std::vector<BivariatePolynomial> cofactors;  // degree-(d-e) basis vanishing on B \ section
};

// The catalog C_{d,e}(B) for e in [1, d-1]. Throws PreconditionError unless B is in N_d.
std::vector<ExceptionalCurve> exceptional_catalog(const std::vector<PlanePoint>& b, int d);

struct PipelineState {
  std::vector<PlanePoint> points;
  std::vector<PlanePoint> basis;
  int d = 0;
  HyperprojectionMap map;
  std::vector<std::size_t> d_a;                  // A inside psi_d^{-1}(V_d(B))
  std::vector<std::size_t> e_a;                  // A inside E_d(B)
  std::vector<ExceptionalCurve> catalog;
  std::vector<ProjectivePoint> exceptional_images;  // per catalog entry
  std::vector<ProjectivePoint> s;                // distinct images of A \ E_d(B)
  std::vector<std::vector<std::size_t>> fibers;  // A-indices over each point of s
  std::vector<ProjectivePoint> t;                // distinct images of E_d(B) \ D_d(B)
  std::size_t delta = 0;
  long chart = 0;                                // line at infinity u0 + k u1 + k^2 u2
  std::vector<PlanePoint> s_affine;              // s in the chart

  std::size_t n() const { return 2 * delta + d_a.size(); }
};

// Throws PreconditionError unless B is in N_d(A) and A is not on a curve of degree <= d;
// throws LemmaViolation if a projection property fails.
PipelineState build_pipeline(const PointConfiguration& a, const std::vector<PlanePoint>& b);

// Lines through exactly two points of s and none of t.
std::vector<ProjectiveLine> two_point_lines(const std::vector<ProjectivePoint>& s, const std::vector<ProjectivePoint>& t);

struct PipelineTrace {
  std::size_t d_a = 0;
  std::size_t e_a = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t delta = 0;
  std::size_t n = 0;
  std::size_t lines = 0;
  std::size_t emitted = 0;
};

struct BasisCurves {
  DeterminedCurveSet curves;
  PipelineTrace trace;
  std::string report;  // nonempty when the search was skipped
};

BasisCurves curves_from_basis(const PointConfiguration& a, const std::vector<PlanePoint>& b);

}  // namespace ordcurves
