#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordcurves/rational.hpp"

namespace ordcurves {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Throws PreconditionError on ragged input.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  void append_row(const Vector& row);
  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const Matrix& m);

struct Echelon {
  std::vector<Vector> rows;          // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon reduced_echelon(const Matrix& m);

// Basis of {v : m v = 0}, given as the reduced echelon basis of the kernel:
// each vector has leading entry 1 and vectors are ordered by leading position.
std::vector<Vector> nullspace(const Matrix& m);

// Affine subspace of Q^n. The empty flat has dimension -1.
class AffineFlat {
 public:
  static AffineFlat empty(std::size_t ambient_dim);
  // Smallest flat containing all points. Throws PreconditionError on dimension mismatch.
  static AffineFlat span(std::size_t ambient_dim, const std::vector<Vector>& points);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return base_ ? static_cast<int>(directions_.size()) : -1; }
  bool is_empty() const { return !base_.has_value(); }
  const std::optional<Vector>& basepoint() const { return base_; }
  const std::vector<Vector>& directions() const { return directions_; }

  bool contains(const Vector& z) const;
  bool contains(const AffineFlat& other) const;
  AffineFlat join(const Vector& z) const;
  AffineFlat intersect(const AffineFlat& other) const;

  // Affine equations c0 + c.z = 0 cutting out the flat, as vectors (c0, c1..cn).
  // The empty flat yields the single inconsistent equation (1, 0, .., 0).
  std::vector<Vector> equations() const;

  friend bool operator==(const AffineFlat& a, const AffineFlat& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
  }

 private:
  explicit AffineFlat(std::size_t ambient) : ambient_(ambient) {}
  Vector reduce(Vector w) const;

  std::size_t ambient_ = 0;
  std::optional<Vector> base_;
  std::vector<Vector> directions_;   // reduced echelon rows
  std::vector<std::size_t> pivots_;
};

// Affine dimension of the span of the points (-1 for none).
int affine_dim(const std::vector<Vector>& points);

}  // namespace ordcurves
