#ifndef NLIE_LINALG_HPP
#define NLIE_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

/// Dense matrix over the rationals. Dimensions are fixed at construction.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rat& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transposed() const;

  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

  /// Row-major flattening, used as the coordinate system on endomorphism
  /// space throughout.
  Vec flatten() const { return data_; }
  static Matrix unflatten(const Vec& flat, std::size_t rows, std::size_t cols);

  Rat trace() const;
  Rat determinant() const;  // square only

 private:
  std::size_t rows_, cols_;
  Vec data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws std::invalid_argument if singular.
Matrix inverse(const Matrix& m);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rat& c);
bool vec_is_zero(const Vec& v);
Vec unit_vec(std::size_t dim, std::size_t index);

/// Reduced row echelon form; returns the RREF and the pivot columns.
/// Row space is preserved, and the result is the canonical form.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// A subspace of Q^ambient, stored as its canonical RREF basis with zero
/// rows dropped. Equality of subspaces is equality of representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(const std::vector<Vec>& vectors,
                       std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace kernel(const Matrix& m);  // null space of m, in the domain

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Residual of v after eliminating against the basis; zero iff v is in
  /// the subspace. Support lies on non-pivot columns.
  Vec reduce(const Vec& v) const;
  /// Coordinates of v in the RREF basis; only valid when contains(v).
  Vec coordinates_of(const Vec& v) const;

  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical projection onto the quotient by a subspace. Representatives
/// are the non-pivot standard basis indices, so the projection is the
/// identity on representative coordinates and vanishes exactly on the
/// subspace.
struct QuotientMap {
  std::vector<std::size_t> representatives;
  Matrix projection;  // (ambient - dim) x ambient

  Vec project(const Vec& v) const { return projection.apply(v); }
  /// Canonical lift of quotient coordinates back to the ambient space.
  Vec lift(const Vec& q) const;
  std::size_t ambient_dim() const { return projection.cols(); }
  std::size_t quotient_dim() const { return projection.rows(); }
};

QuotientMap quotient_map(const Subspace& s);

}  // namespace nlie

#endif
