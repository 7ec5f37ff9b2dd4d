#include "ordcurves/projection.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ordcurves/combinatorics.hpp"
#include "ordcurves/errors.hpp"
#include "ordcurves/nd_families.hpp"
#include "ordcurves/veronese.hpp"

namespace ordcurves {

ProjectivePoint::ProjectivePoint(Vector coords) : coords_(normalize_leading(std::move(coords))) {
  if (is_zero(coords_)) throw PreconditionError("projective point needs a nonzero vector");
}

Vector cross(const Vector& u, const Vector& v) {
  if (u.size() != 3 || v.size() != 3) throw PreconditionError("cross product needs 3-vectors");
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

HyperprojectionMap::HyperprojectionMap(const AffineFlat& center) : center_(center) {
  if (center.is_empty()) throw PreconditionError("projection center must be nonempty");
  const std::size_t n = center.ambient_dim();
  Matrix span(0, n + 1);
  Vector base(n + 1);
  base[0] = 1;
  std::copy(center.basepoint()->begin(), center.basepoint()->end(), base.begin() + 1);
  span.append_row(base);
  for (const auto& dir : center.directions()) {
    Vector row(n + 1);
    std::copy(dir.begin(), dir.end(), row.begin() + 1);
    span.append_row(row);
  }
  forms_ = nullspace(span);
  if (forms_.size() < 2) throw PreconditionError("projection center must have codimension at least 2");
}

ProjectivePoint HyperprojectionMap::project(const Vector& z) const {
  if (z.size() != center_.ambient_dim()) throw PreconditionError("point dimension does not match projection");
  Vector h(z.size() + 1);
  h[0] = 1;
  std::copy(z.begin(), z.end(), h.begin() + 1);
  Vector u;
  for (const auto& f : forms_) u.push_back(dot(f, h));
  if (is_zero(u)) throw PreconditionError("projection center: point lies in F");
  return ProjectivePoint(std::move(u));
}

Vector HyperprojectionMap::pullback(const Vector& c) const {
  if (c.size() != forms_.size()) throw PreconditionError("target hyperplane has wrong dimension");
  Vector out(center_.ambient_dim() + 1);
  for (std::size_t i = 0; i < forms_.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c[i] * forms_[i][j];
  return out;
}

Vector HyperprojectionMap::coordinates_of(const Vector& form) const {
  // Solve sum c_i forms_i = form; forms_ are in reduced echelon form.
  const std::size_t k = forms_.size();
  Matrix aug(form.size(), k + 1);
  for (std::size_t j = 0; j < form.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = forms_[i][j];
    aug(j, k) = form[j];
  }
  Echelon e = reduced_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == k) throw LemmaViolation("form does not vanish on the projection center");
  Vector c(k);
  for (std::size_t r = 0; r < e.rows.size(); ++r) c[e.pivots[r]] = e.rows[r][k];
  return c;
}

ProjectivePoint hyperproject(const HyperprojectionMap& map, const Vector& z) { return map.project(z); }

namespace {

BivariatePolynomial from_coefficients(const Vector& coeffs, int e) {
  BivariatePolynomial p;
  std::vector<Monomial> monos = monomials_up_to(e, true);
  for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], coeffs[i]);
  return p;
}

std::vector<Vector> vanishing_basis(const std::vector<PlanePoint>& pts, int e) {
  Matrix m(0, static_cast<std::size_t>(binomial(e + 2, 2)));
  for (const auto& p : pts) m.append_row(homogeneous_lift(p, e));
  return nullspace(m);
}

Vector augmented_of(const BivariatePolynomial& p, int d) {
  std::vector<Monomial> monos = monomials_up_to(d, true);
  Vector v;
  for (Monomial mono : monos) v.push_back(p.coefficient(mono));
  return v;
}

}  // namespace

std::vector<ExceptionalCurve> exceptional_catalog(const std::vector<PlanePoint>& b, int d) {
  NdVerdict verdict = nd_verify({}, b, d);
  if (!verdict.member) throw PreconditionError("B is not in N_d (condition " + verdict.failure->condition + ")");
  std::vector<ExceptionalCurve> out;
  for (int e = 1; e <= d - 1; ++e) {
    const long k = binomial(d + 2, 2) - binomial(d - e + 2, 2) - 1;
    std::map<PlaneCurve, ExceptionalCurve> found;
    for (std::uint64_t mask : realizable_sections(b, e)) {
      if (std::popcount(mask) != k) continue;
      std::vector<std::size_t> section = mask_members(mask);
      std::vector<PlanePoint> on, off;
      for (std::size_t i = 0; i < b.size(); ++i) (mask >> i & 1u ? on : off).push_back(b[i]);
      std::vector<Vector> gens = vanishing_basis(on, e);
      if (gens.size() != 1) throw LemmaViolation("exceptional section does not span a hyperplane");
      BivariatePolynomial p = from_coefficients(gens.front(), e).canonical();
      if (p.degree() != e) throw LemmaViolation("exceptional generator has the wrong degree");
      std::vector<Vector> cof = vanishing_basis(off, d - e);
      if (cof.size() != 2) throw LemmaViolation("complement of an exceptional section has unexpected span");
      ExceptionalCurve ec;
      ec.e = e;
      ec.curve = PlaneCurve::from_polynomial(p);
      ec.polynomial = p;
      ec.section = section;
      for (const auto& c : cof) ec.cofactors.push_back(from_coefficients(c, d - e));
      found.emplace(ec.curve, std::move(ec));
    }
    // Fewer than 2^(2^(d+2)) curves per e.
    if (d <= 3 && found.size() >= (std::size_t{1} << (std::size_t{1} << (d + 2))))
      throw LemmaViolation("exceptional catalog exceeds its bound");
    for (auto& [curve, ec] : found) out.push_back(std::move(ec));
  }
  return out;
}

PipelineState build_pipeline(const PointConfiguration& a, const std::vector<PlanePoint>& b) {
  const int d = a.d();
  if (d < 2) throw PreconditionError("the projection pipeline needs d >= 2");
  NdVerdict verdict = nd_verify(a.points(), b, d);
  if (!verdict.member) throw PreconditionError("B is not in N_d(A) (condition " + verdict.failure->condition + ")");
  if (contained_in_curve(a.points(), d).contained) throw PreconditionError("A lies on a curve of degree <= d");

  const std::size_t big_n = veronese_dim(d);
  AffineFlat vdb = AffineFlat::span(big_n, lift_all(b, d));
  PipelineState st{a.points(), b, d, HyperprojectionMap(vdb), {}, {}, {}, {}, {}, {}, {}, 0, 0, {}};
  if (st.map.forms().size() != 3) throw LemmaViolation("V_d(B) does not have codimension 3");

  const auto& lifted = a.lifted();
  std::vector<bool> in_d(a.size(), false), in_e(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (vdb.contains(lifted[i])) {
      in_d[i] = in_e[i] = true;
      st.d_a.push_back(i);
    }
  }

  st.catalog = exceptional_catalog(b, d);
  std::set<ProjectivePoint> t_set;
  for (const auto& ec : st.catalog) {
    // V_d(C u B) is cut out by p*q1 and p*q2; it projects to one point.
    Vector c1 = st.map.coordinates_of(augmented_of(ec.polynomial * ec.cofactors[0], d));
    Vector c2 = st.map.coordinates_of(augmented_of(ec.polynomial * ec.cofactors[1], d));
    ProjectivePoint image(cross(c1, c2));
    st.exceptional_images.push_back(image);
    t_set.insert(image);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const PlanePoint& pt = a.points()[i];
      bool on_curve = sgn(ec.polynomial.evaluate(pt)) == 0;
      bool on_flat = on_curve || (sgn(ec.cofactors[0].evaluate(pt)) == 0 && sgn(ec.cofactors[1].evaluate(pt)) == 0);
      if (!on_flat || in_d[i]) continue;
      in_e[i] = true;
      if (!(st.map.project(lifted[i]) == image))
        throw LemmaViolation("exceptional curve point does not project to the curve's image");
    }
  }
  st.t.assign(t_set.begin(), t_set.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (in_e[i]) st.e_a.push_back(i);

  std::map<ProjectivePoint, std::vector<std::size_t>> fibers;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (in_e[i]) continue;
    ProjectivePoint u = st.map.project(lifted[i]);
    if (t_set.count(u)) throw LemmaViolation("image of a non-exceptional point lies in T");
    fibers[u].push_back(i);
  }
  for (auto& [u, idx] : fibers) {
    st.delta = std::max(st.delta, idx.size());
    st.s.push_back(u);
    st.fibers.push_back(idx);
  }
  if (st.delta + st.d_a.size() > static_cast<std::size_t>(d * d))
    throw LemmaViolation("fiber bound delta + |D_A| <= d^2 fails");

  // Chart: the first line u0 + k u1 + k^2 u2 = 0 missing every image.
  auto chart_value = [](const ProjectivePoint& u, long k) -> Rational {
    return u.coords()[0] + u.coords()[1] * k + u.coords()[2] * k * k;
  };
  for (long k = 0;; ++k) {
    bool clear = true;
    for (const auto* group : {&st.s, &st.t})
      for (const auto& u : *group)
        if (sgn(chart_value(u, k)) == 0) clear = false;
    if (clear) {
      st.chart = k;
      break;
    }
  }
  for (const auto& u : st.s) {
    Rational w = chart_value(u, st.chart);
    if (sgn(w) == 0) throw LemmaViolation("projected point on the line at infinity");
    st.s_affine.push_back({u.coords()[1] / w, u.coords()[2] / w});
  }
  return st;
}

std::vector<ProjectiveLine> two_point_lines(const std::vector<ProjectivePoint>& s, const std::vector<ProjectivePoint>& t) {
  std::set<ProjectiveLine> lines;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) lines.insert(ProjectiveLine(cross(s[i].coords(), s[j].coords())));
  std::vector<ProjectiveLine> out;
  for (const auto& line : lines) {
    std::size_t on_s = 0;
    for (const auto& u : s)
      if (sgn(dot(line.coords(), u.coords())) == 0) ++on_s;
    bool hits_t = std::any_of(t.begin(), t.end(), [&](const ProjectivePoint& u) { return sgn(dot(line.coords(), u.coords())) == 0; });
    if (on_s == 2 && !hits_t) out.push_back(line);
  }
  return out;
}

BasisCurves curves_from_basis(const PointConfiguration& a, const std::vector<PlanePoint>& b) {
  PipelineState st = build_pipeline(a, b);
  const int d = a.d();
  BasisCurves out;
  out.curves.d = d;
  out.curves.n = st.n();
  out.trace = {st.d_a.size(), st.e_a.size(), st.s.size(), st.t.size(), st.delta, st.n(), 0, 0};

  Matrix s_rows(0, 3);
  for (const auto& u : st.s) s_rows.append_row(u.coords());
  if (rank(s_rows) < 3) {
    out.report = "projected set is collinear; no two-point lines sought";
    return out;
  }

  std::vector<ProjectiveLine> lines = two_point_lines(st.s, st.t);
  out.trace.lines = lines.size();
  std::set<HyperplaneForm> seen;
  std::map<PlaneCurve, DeterminedCurve> by_curve;
  for (const auto& line : lines) {
    HyperplaneForm h = HyperplaneForm::from_augmented(st.map.pullback(line.coords()));
    if (!seen.insert(h).second) throw LemmaViolation("two lines pull back to the same hyperplane");
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
  std::uint64_t fan_cap = 1;
  for (int i = 0; i < d; ++i) fan_cap *= static_cast<std::uint64_t>(d);
  for (auto& [curve, dc] : by_curve) {
    std::sort(dc.hyperplanes.begin(), dc.hyperplanes.end());
    if (dc.hyperplanes.size() > fan_cap) throw LemmaViolation("more than d^d hyperplanes pull back to one curve");
    for (const auto& p : b)
      if (!curve.contains(p)) throw LemmaViolation("pipeline curve misses a basis point");
    if (dc.incidence.size() <= st.n()) out.curves.curves.push_back(std::move(dc));
  }
  std::sort(out.curves.curves.begin(), out.curves.curves.end(),
            [](const DeterminedCurve& x, const DeterminedCurve& y) { return x.hyperplanes.front() < y.hyperplanes.front(); });
  out.trace.emitted = out.curves.curves.size();
  return out;
}

}  // namespace ordcurves
