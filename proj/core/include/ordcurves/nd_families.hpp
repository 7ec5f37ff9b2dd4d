#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcurves/carrier.hpp"
#include "ordcurves/linalg.hpp"
#include "ordcurves/point.hpp"

namespace ordcurves {

// Size of a basis candidate: C(d+2,2) - 3.
std::size_t basis_size(int d);

struct NdQuantities {
  int e = 0;
  AffineFlat v = AffineFlat::empty(0);   // Fl(psi_e(D))
  AffineFlat w = AffineFlat::empty(0);   // Fl(psi_{d-e}(B \ psi_e^{-1}(V)))
  long alpha = 0;
  long beta = 0;
  long gamma = 0;
  long mu = 0;
  long tau = 0;
};

// Throws PreconditionError unless 1 <= e <= d-1 and D is a subset of B.
NdQuantities nd_quantities(const std::vector<PlanePoint>& b, const std::vector<PlanePoint>& dset, int e, int d);

// U_e(B, D) as a union of up to three flat pullbacks.
class ForbiddenRegion {
 public:
  ForbiddenRegion(const std::vector<PlanePoint>& b, const std::vector<PlanePoint>& dset, int e, int d);
  bool contains(const PlanePoint& p) const;
  std::size_t parts() const { return 1 + (ve_ ? 1 : 0) + (w_ ? 1 : 0); }
  const NdQuantities& quantities() const { return q_; }

 private:
  int d_;
  int e_;
  NdQuantities q_;
  AffineFlat vd_ = AffineFlat::empty(0);
  std::optional<AffineFlat> ve_;
  std::optional<AffineFlat> w_;
};

bool forbidden_region_membership(const std::vector<PlanePoint>& b, const std::vector<PlanePoint>& dset, int e, int d,
                                 const PlanePoint& p);

struct NdFailure {
  std::string condition;             // "i", "ii", "iii" or "iv"
  int e = 0;
  std::vector<std::size_t> section;  // indices into B
  long measured = 0;
  long threshold = 0;
};

struct NdVerdict {
  bool member = false;
  std::optional<NdFailure> failure;
};

// Checks conditions i-iv. Throws PreconditionError on wrong size, duplicates,
// d < 2, or (when A is nonempty) B not contained in A.
NdVerdict nd_verify(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b, int d);

// Subsets S of B (as bit masks) cut out exactly by some curve of degree e,
// largest first.
std::vector<std::uint64_t> realizable_sections(const std::vector<PlanePoint>& b, int e);

struct ChainOptions {
  std::vector<PlanePoint> b0;
  std::optional<CarrierCurve> c0;
  // Candidate order as a permutation of indices of A; empty means identity.
  std::vector<std::size_t> order;
  // Throw LemmaViolation when the growth guard fails at some step.
  bool strict_guard = false;
};

struct ChainStep {
  std::size_t size = 0;            // |B_i| after the step
  std::optional<PlanePoint> chosen;
  std::size_t active_pairs = 0;    // |I(B_i, C0)|
  long max_guard = 0;              // max of tau and mu over I(B_i, C0)
  bool guard_ok = true;
  std::size_t rejected = 0;        // candidates skipped because they lay in U
};

struct ChainResult {
  bool success = false;
  std::vector<PlanePoint> basis;
  std::vector<ChainStep> steps;              // steps[0] describes B_0
  std::vector<std::size_t> guard_failures;   // indices into steps
  std::string failure;
};

// Grows B_0 into a basis candidate by adding, at each step, the first candidate
// outside the union of forbidden regions over I(B, C0).
ChainResult grow_nd_chain(const std::vector<PlanePoint>& a, int d, const ChainOptions& opts = {});

// Deterministic permutation of [0, n) from a seed.
std::vector<std::size_t> seeded_order(std::size_t n, std::uint64_t seed);

// Number of C(e+2,2)-subsets of A not on a curve of degree <= e; e = 0 gives |A|.
std::uint64_t count_spanning_subsets(const std::vector<PlanePoint>& a, int e);

}  // namespace ordcurves
