#include "ordcurves/determined.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordcurves/combinatorics.hpp"
#include "ordcurves/errors.hpp"
#include "ordcurves/linalg.hpp"
#include "ordcurves/parallel.hpp"

namespace ordcurves {

PointConfiguration::PointConfiguration(std::vector<PlanePoint> points, int d) : points_(std::move(points)), d_(d) {
  if (d < 1) throw PreconditionError("degree d must be at least 1");
  if (has_duplicates(points_)) throw PreconditionError("point configuration contains duplicate points");
  lifted_ = lift_all(points_, d_);
}

std::vector<Vector> PointConfiguration::homogeneous_rows() const {
  std::vector<Vector> rows;
  rows.reserve(lifted_.size());
  for (const auto& z : lifted_) {
    Vector r = z;
    r.insert(r.begin(), Rational(1));
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

Matrix vanishing_system(const std::vector<PlanePoint>& points, int e) {
  Matrix m(0, static_cast<std::size_t>(binomial(e + 2, 2)));
  for (const auto& p : points) m.append_row(homogeneous_lift(p, e));
  return m;
}

BivariatePolynomial polynomial_from_coefficients(const Vector& coeffs, int e) {
  BivariatePolynomial p;
  std::vector<Monomial> monos = monomials_up_to(e, true);
  for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], coeffs[i]);
  return p;
}

}  // namespace

std::size_t vanishing_dimension(const std::vector<PlanePoint>& points, int e) {
  Matrix m = vanishing_system(points, e);
  return m.cols() - rank(m);
}

CurveWitness contained_in_curve(const std::vector<PlanePoint>& points, int e) {
  if (e < 1) throw PreconditionError("curve degree must be at least 1");
  CurveWitness out;
  if (points.empty()) {
    out.contained = true;
    out.witness = BivariatePolynomial::x();
    return out;
  }
  std::vector<Vector> basis = nullspace(vanishing_system(points, e));
  if (basis.empty()) return out;
  out.contained = true;
  out.witness = polynomial_from_coefficients(basis.front(), e).canonical();
  return out;
}

DeterminedCurveSet enumerate_determined(const PointConfiguration& a, const EnumerationOptions& opts) {
  const int d = a.d();
  if (contained_in_curve(a.points(), d).contained)
    throw PreconditionError("configuration lies on a curve of degree <= d");
  const std::size_t big_n = veronese_dim(d);
  const std::vector<Vector> rows = a.homogeneous_rows();
  const auto combos = all_combinations(a.size(), big_n);

  std::vector<std::optional<HyperplaneForm>> found(combos.size());
  parallel_for(combos.size(), opts.workers, [&](std::size_t k) {
    Matrix m(0, big_n + 1);
    for (std::size_t i : combos[k]) m.append_row(rows[i]);
    std::vector<Vector> ker = nullspace(m);
    if (ker.size() == 1) found[k] = HyperplaneForm::from_augmented(ker.front());
  });

  std::set<HyperplaneForm> hyperplanes;
  for (auto& h : found)
    if (h) hyperplanes.insert(std::move(*h));

  std::map<PlaneCurve, DeterminedCurve> by_curve;
  for (const auto& h : hyperplanes) {
    PlaneCurve c = tau_inverse(h, d);
    auto it = by_curve.find(c);
    if (it == by_curve.end()) {
      DeterminedCurve dc{c, {}, {}};
      for (std::size_t i = 0; i < a.size(); ++i)
        if (c.contains(a.points()[i])) dc.incidence.push_back(i);
      it = by_curve.emplace(c, std::move(dc)).first;
    }
    it->second.hyperplanes.push_back(h);
  }

  DeterminedCurveSet out;
  out.d = d;
  std::uint64_t fan_cap = 1;
  for (int i = 0; i < d; ++i) fan_cap *= static_cast<std::uint64_t>(d);
  for (auto& [curve, dc] : by_curve) {
    if (dc.hyperplanes.size() > fan_cap) throw LemmaViolation("more than d^d hyperplanes pull back to one curve");
    if (dc.incidence.size() < big_n) throw LemmaViolation("determined curve meets A in fewer than C(d+2,2)-1 points");
    out.curves.push_back(std::move(dc));
  }
  std::sort(out.curves.begin(), out.curves.end(),
            [](const DeterminedCurve& x, const DeterminedCurve& y) { return x.hyperplanes.front() < y.hyperplanes.front(); });
  return out;
}

DeterminedCurveSet restrict_to_ordinary(const DeterminedCurveSet& all, std::size_t n) {
  DeterminedCurveSet out;
  out.d = all.d;
  out.n = n;
  for (const auto& c : all.curves)
    if (c.incidence.size() <= n) out.curves.push_back(c);
  return out;
}

DeterminedCurveSet ordinary_curves(const PointConfiguration& a, std::size_t n, const EnumerationOptions& opts) {
  if (n < veronese_dim(a.d())) {
    DeterminedCurveSet out;
    out.d = a.d();
    out.n = n;
    return out;
  }
  return restrict_to_ordinary(enumerate_determined(a, opts), n);
}

Richness max_curve_richness(const std::vector<PlanePoint>& points, int e, const EnumerationOptions& opts) {
  if (e < 1) throw PreconditionError("curve degree must be at least 1");
  Richness best;
  if (contained_in_curve(points, e).contained) {
    best.size = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) best.witness.push_back(i);
    return best;
  }
  // Otherwise a maximal section has a one-dimensional vanishing space, so it is
  // cut out by a spanned hyperplane.
  DeterminedCurveSet all = enumerate_determined(PointConfiguration(points, e), opts);
  for (const auto& c : all.curves) {
    if (c.incidence.size() > best.size) {
      best.size = c.incidence.size();
      best.witness = c.incidence;
    }
  }
  return best;
}

Rational default_regularity_threshold(int d) {
  if (d < 1) throw PreconditionError("degree d must be at least 1");
  Integer exponent = 1;
  mpz_mul_2exp(exponent.get_mpz_t(), exponent.get_mpz_t(), static_cast<mp_bitcnt_t>(3 * d + 8));
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent.get_ui()));
  return Rational(Integer(1), den);
}

RegularityReport regularity_report(const std::vector<PlanePoint>& points, int d,
                                   const std::optional<Rational>& threshold, const EnumerationOptions& opts) {
  RegularityReport r;
  r.threshold = threshold ? *threshold : default_regularity_threshold(d);
  if (sgn(r.threshold) <= 0) throw PreconditionError("regularity threshold must be positive");
  if (points.empty()) throw PreconditionError("regularity needs a nonempty configuration");
  r.witness = max_curve_richness(points, d, opts);
  r.ratio = Rational(static_cast<long>(r.witness.size), static_cast<unsigned long>(points.size()));
  r.ratio.canonicalize();
  r.is_regular = r.ratio <= r.threshold;
  return r;
}

}  // namespace ordcurves
