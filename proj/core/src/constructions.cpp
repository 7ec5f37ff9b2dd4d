#include "ordcurves/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ordcurves/combinatorics.hpp"
#include "ordcurves/determined.hpp"
#include "ordcurves/errors.hpp"
#include "ordcurves/linalg.hpp"
#include "ordcurves/veronese.hpp"

namespace ordcurves {

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::theorem6: return "theorem6";
    case ConstructionKind::theorem8: return "theorem8";
    case ConstructionKind::random_general: return "random_general";
    case ConstructionKind::grid: return "grid";
  }
  return "grid";
}

ConstructionKind parse_construction_kind(const std::string& text) {
  for (auto k : {ConstructionKind::theorem6, ConstructionKind::theorem8, ConstructionKind::random_general,
                 ConstructionKind::grid})
    if (to_string(k) == text) return k;
  throw PreconditionError("unknown construction kind '" + text + "'");
}

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Every `size`-subset of pts containing the last point has a trivial degree-g vanishing space.
bool keeps_genericity(const std::vector<PlanePoint>& pts, int g) {
  const std::size_t size = static_cast<std::size_t>(binomial(g + 2, 2));
  if (pts.size() < size) return true;
  const std::size_t last = pts.size() - 1;
  bool ok = true;
  for_each_combination(last, size - 1, [&](const std::vector<std::size_t>& idx) {
    Matrix m(0, size);
    for (std::size_t i : idx) m.append_row(homogeneous_lift(pts[i], g));
    m.append_row(homogeneous_lift(pts[last], g));
    if (rank(m) < size) ok = false;
    return ok;
  });
  return ok;
}

}  // namespace

ConstructionResult construct_theorem6(int d, std::size_t m, std::uint64_t seed) {
  if (d <= 1) throw PreconditionError("theorem6 hypothesis: d > 1");
  const std::int64_t mm = static_cast<std::int64_t>(m);
  if (2 * mm <= std::max<std::int64_t>(3 * d * d - 3 * d + 4, d * d + 4 * d))
    throw PreconditionError("theorem6 hypothesis: m > max((3d^2-3d+4)/2, (d^2+4d)/2)");
  const std::size_t k0 = static_cast<std::size_t>(binomial(d + 1, 2));
  const std::int64_t r = 4 * mm + 8;
  std::mt19937_64 rng(seed);

  std::vector<PlanePoint> b0;
  std::size_t attempts = 0;
  for (;;) {
    if (++attempts > 1000) throw PreconditionError("theorem6: could not sample B0 off a degree-(d-1) curve");
    std::set<PlanePoint> pts;
    while (pts.size() < k0) {
      std::int64_t y = draw(rng, 1, r) * (rng() % 2 ? 1 : -1);
      pts.insert({Rational(draw(rng, -r, r)), Rational(y)});
    }
    b0.assign(pts.begin(), pts.end());
    if (!contained_in_curve(b0, d - 1).contained) break;
  }
  std::set<std::int64_t> xs;
  while (xs.size() < m - k0) xs.insert(draw(rng, -r, r));

  ConstructionResult out;
  out.recipe = {ConstructionKind::theorem6, d, 0, m, std::nullopt, seed};
  out.points = b0;
  std::vector<std::size_t> idx0(k0), idx1;
  for (std::size_t i = 0; i < k0; ++i) idx0[i] = i;
  for (std::int64_t x : xs) {
    idx1.push_back(out.points.size());
    out.points.push_back({Rational(x), Rational(0)});
  }
  out.partition = {{"B0", idx0}, {"B1", idx1}};
  out.certificates.push_back({"B0 not on a curve of degree d-1", true, "rank certificate"});
  bool on_curve = contained_in_curve(out.points, d).contained;
  if (on_curve) throw LemmaViolation("theorem6 output lies on a curve of degree d");
  out.certificates.push_back({"A not on a curve of degree d", true, "rank certificate"});
  return out;
}

ConstructionResult construct_theorem8(int d, std::size_t n, std::size_t m, const CarrierCurve& carrier,
                                      std::uint64_t seed) {
  if (d < 1) throw PreconditionError("theorem8 hypothesis: d >= 1");
  const std::int64_t c = binomial(d + 2, 2);
  const std::int64_t nn = static_cast<std::int64_t>(n), mm = static_cast<std::int64_t>(m);
  if (nn < c - 1) throw PreconditionError("theorem8 hypothesis: n >= C(d+2,2) - 1");
  if (mm <= 2 * nn + 1 - c) throw PreconditionError("theorem8 hypothesis: m > 2n + 1 - C(d+2,2)");
  if (carrier.polynomial().degree() != d) throw PreconditionError("theorem8 carrier must have degree d");

  const std::size_t big_n = veronese_dim(d);
  const std::size_t cap = big_n - 1;  // flats spanned by at most N-1 lifts
  std::vector<PlanePoint> chosen;
  std::vector<Vector> lifts;
  std::size_t cursor = static_cast<std::size_t>(seed % 64);
  std::size_t tried = 0;
  const std::size_t budget = 4096 + 64 * m * m;
  while (chosen.size() + 1 < m) {
    if (++tried > budget) throw PreconditionError("theorem8: carrier parameter sweep exhausted");
    std::optional<PlanePoint> p = carrier.at(parameter_at(cursor++));
    if (!p || std::find(chosen.begin(), chosen.end(), *p) != chosen.end()) continue;
    Vector z = lift(*p, d);
    const std::size_t k = std::min(chosen.size(), cap);
    bool clear = true;
    for_each_combination(chosen.size(), k, [&](const std::vector<std::size_t>& idx) {
      AffineFlat f = AffineFlat::span(big_n, select(lifts, idx));
      if (f.contains(z)) clear = false;
      return clear;
    });
    if (!clear) continue;
    chosen.push_back(*p);
    lifts.push_back(std::move(z));
  }

  PlanePoint a0{0, 0};
  for (std::size_t i = 0;; ++i) {
    a0 = {parameter_at(i), parameter_at(i + 1)};
    if (!carrier.contains(a0)) break;
  }

  ConstructionResult out;
  out.recipe = {ConstructionKind::theorem8, d, n, m, carrier.description(), seed};
  out.points.push_back(a0);
  out.points.insert(out.points.end(), chosen.begin(), chosen.end());
  std::vector<std::size_t> on(chosen.size());
  for (std::size_t i = 0; i < on.size(); ++i) on[i] = i + 1;
  out.partition = {{"a0", {0}}, {"carrier", on}};
  out.certificates.push_back({"carrier lifts in general position", true,
                              "each lift avoids every flat spanned by at most " + std::to_string(cap) + " earlier lifts"});
  if (contained_in_curve(out.points, d).contained) throw LemmaViolation("theorem8 output lies on a curve of degree d");
  out.certificates.push_back({"A not on a curve of degree d", true, "rank certificate"});
  return out;
}

ConstructionResult sample_configuration(ConstructionKind kind, const SampleParams& params, std::uint64_t seed) {
  ConstructionResult out;
  out.recipe.kind = kind;
  out.recipe.seed = seed;
  if (kind == ConstructionKind::grid) {
    if (params.side == 0) throw PreconditionError("grid side must be positive");
    for (std::size_t i = 0; i < params.side; ++i)
      for (std::size_t j = 0; j < params.side; ++j)
        out.points.push_back({Rational(static_cast<long>(i)), Rational(static_cast<long>(j))});
    out.recipe.m = out.points.size();
    return out;
  }
  if (kind != ConstructionKind::random_general) throw PreconditionError("sample_configuration expects grid or random_general");
  if (params.genericity < 0) throw PreconditionError("genericity level must be nonnegative");
  const std::int64_t r = params.range > 0 ? params.range : std::max<std::int64_t>(10, 4 * static_cast<std::int64_t>(params.count));
  std::mt19937_64 rng(seed);
  std::size_t rejected = 0;
  while (out.points.size() < params.count) {
    PlanePoint p{Rational(draw(rng, -r, r)), Rational(draw(rng, -r, r))};
    bool fresh = std::find(out.points.begin(), out.points.end(), p) == out.points.end();
    out.points.push_back(p);
    if (fresh && (params.genericity == 0 || keeps_genericity(out.points, params.genericity))) continue;
    out.points.pop_back();
    if (++rejected > params.budget) throw PreconditionError("random_general: rejection budget exceeded");
  }
  out.recipe.m = out.points.size();
  out.recipe.d = params.genericity;
  if (params.genericity > 0) {
    const std::int64_t size = binomial(params.genericity + 2, 2);
    out.certificates.push_back({"no " + std::to_string(size) + " points on a curve of degree <= " +
                                    std::to_string(params.genericity),
                                true, "all subsets scanned, " + std::to_string(rejected) + " rejections"});
  }
  return out;
}

}  // namespace ordcurves
