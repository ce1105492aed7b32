#pragma once

#include "walker/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace walker {

using Vector = std::vector<Scalar>;

/// Dense exact matrix over Q(sqrt 3), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  /// Elementary antisymmetric E_ij - E_ji (0-based).
  static Matrix elementary_so(std::size_t n, std::size_t i, std::size_t j);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Scalar>& entries() const { return data_; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_antisymmetric() const;
  bool is_symmetric() const;
  Scalar trace() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Strict upper triangle of an antisymmetric matrix, row by row.
Vector so_coordinates(const Matrix& a);
Matrix so_from_coordinates(std::size_t n, std::span<const Scalar> coords);

/// Row-reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Exact basis of the right null space {v : M v = 0}; empty iff M injective.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Exact rank of a list of equal-length vectors. Throws std::invalid_argument
/// on a length mismatch.
std::size_t span_dim(const std::vector<Vector>& vectors);
/// Same for matrices, flattened. Throws on shape mismatch.
std::size_t span_dim(const std::vector<Matrix>& matrices);

Vector flatten(const Matrix& m);

/// Incrementally maintained row-reduced basis of a subspace of K^dim.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v; returns true if it enlarged the span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  /// Coordinates of v w.r.t. the stored input vectors that enlarged the
  /// span, or nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  std::size_t dim() const { return reduced_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  /// The vectors (as given) that enlarged the span, in insertion order.
  const std::vector<Vector>& generators() const { return generators_; }

 private:
  /// Reduces v against the basis; returns the residual and, when tracking
  /// is requested, the combination of generators that was subtracted.
  Vector reduce(Vector v, Vector* combo) const;

  std::size_t dim_;
  std::vector<Vector> reduced_;        // echelon rows, pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;         // reduced_[k] = sum combos_[k][j] * generators_[j]
  std::vector<Vector> generators_;
};

/// Inertia (positive, negative, zero counts) of a symmetric matrix by exact
/// congruence diagonalization.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(Matrix symmetric);

}  // namespace walker
