#include "ordcurves/linalg.hpp"

#include <utility>

#include "ordcurves/errors.hpp"

namespace ordcurves {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw PreconditionError("row length does not match matrix");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = common_denominator(m.row(r));
    for (std::size_t c = 0; c < cols; ++c) {
      Rational scaled = m(r, c) * l;
      a[r][c] = scaled.get_num();
    }
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

Echelon reduced_echelon(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Vector> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r] = m.row(r);
  Echelon out;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    Rational inv = 1 / a[rk][c];
    for (std::size_t j = c; j < cols; ++j) a[rk][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rk || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rk][j];
    }
    out.pivots.push_back(c);
    ++rk;
  }
  a.resize(rk);
  out.rows = std::move(a);
  return out;
}

std::vector<Vector> nullspace(const Matrix& m) {
  const std::size_t cols = m.cols();
  Echelon e = reduced_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  // Re-express the kernel by its own reduced echelon basis.
  Echelon k = reduced_echelon(Matrix::from_rows(basis));
  return k.rows;
}

AffineFlat AffineFlat::empty(std::size_t ambient_dim) { return AffineFlat(ambient_dim); }

AffineFlat AffineFlat::span(std::size_t ambient_dim, const std::vector<Vector>& points) {
  AffineFlat f(ambient_dim);
  if (points.empty()) return f;
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw PreconditionError("point dimension does not match ambient dimension");
  f.base_ = points.front();
  Matrix diffs(0, ambient_dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector d(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) d[j] = points[i][j] - points[0][j];
    diffs.append_row(d);
  }
  Echelon e = reduced_echelon(diffs);
  f.directions_ = std::move(e.rows);
  f.pivots_ = std::move(e.pivots);
  return f;
}

Vector AffineFlat::reduce(Vector w) const {
  for (std::size_t i = 0; i < directions_.size(); ++i) {
    Rational f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) w[j] -= f * directions_[i][j];
  }
  return w;
}

bool AffineFlat::contains(const Vector& z) const {
  if (z.size() != ambient_) throw PreconditionError("point dimension does not match flat");
  if (!base_) return false;
  Vector w(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) w[j] = z[j] - (*base_)[j];
  return is_zero(reduce(std::move(w)));
}

bool AffineFlat::contains(const AffineFlat& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("flat dimension mismatch");
  if (!other.base_) return true;
  if (!contains(*other.base_)) return false;
  for (const auto& d : other.directions_)
    if (!is_zero(reduce(d))) return false;
  return true;
}

AffineFlat AffineFlat::join(const Vector& z) const {
  if (z.size() != ambient_) throw PreconditionError("point dimension does not match flat");
  if (!base_) return span(ambient_, {z});
  AffineFlat f = *this;
  Vector w(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) w[j] = z[j] - (*base_)[j];
  if (is_zero(reduce(w))) return f;
  std::vector<Vector> rows = directions_;
  rows.push_back(std::move(w));
  Echelon e = reduced_echelon(Matrix::from_rows(rows));
  f.directions_ = std::move(e.rows);
  f.pivots_ = std::move(e.pivots);
  return f;
}

std::vector<Vector> AffineFlat::equations() const {
  std::vector<Vector> eqs;
  if (!base_) {
    Vector bad(ambient_ + 1);
    bad[0] = 1;
    eqs.push_back(std::move(bad));
    return eqs;
  }
  std::vector<Vector> normals = nullspace(Matrix::from_rows(directions_, ambient_));
  for (auto& nrm : normals) {
    Vector eq(ambient_ + 1);
    eq[0] = -dot(nrm, *base_);
    for (std::size_t j = 0; j < ambient_; ++j) eq[j + 1] = nrm[j];
    eqs.push_back(normalize_leading(std::move(eq)));
  }
  return eqs;
}

AffineFlat AffineFlat::intersect(const AffineFlat& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("flat dimension mismatch");
  if (!base_ || !other.base_) return empty(ambient_);
  // Solve c.z = -c0 for all equations of both flats.
  Matrix aug(0, ambient_ + 1);
  for (const auto* flat : {this, &other}) {
    for (const auto& eq : flat->equations()) {
      Vector row(ambient_ + 1);
      for (std::size_t j = 0; j < ambient_; ++j) row[j] = eq[j + 1];
      row[ambient_] = -eq[0];
      aug.append_row(row);
    }
  }
  Echelon e = reduced_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == ambient_) return empty(ambient_);
  Vector particular(ambient_);
  for (std::size_t i = 0; i < e.rows.size(); ++i) particular[e.pivots[i]] = e.rows[i][ambient_];
  Matrix coeffs(0, ambient_);
  for (const auto& r : e.rows) coeffs.append_row(Vector(r.begin(), r.end() - 1));
  AffineFlat f(ambient_);
  f.base_ = std::move(particular);
  Echelon dirs = reduced_echelon(Matrix::from_rows(nullspace(coeffs), ambient_));
  f.directions_ = std::move(dirs.rows);
  f.pivots_ = std::move(dirs.pivots);
  return f;
}

int affine_dim(const std::vector<Vector>& points) {
  if (points.empty()) return -1;
  return AffineFlat::span(points.front().size(), points).dim();
}

}  // namespace ordcurves
