#include "nlie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlie {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (nlie::is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum shape");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  return *this + other.scaled(Rat(-1));
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = c * data_[i];
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply shape");
  Vec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!nlie::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rat& r) { return nlie::is_zero(r); });
}

Matrix Matrix::unflatten(const Vec& flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols)
    throw std::invalid_argument("unflatten size mismatch");
  Matrix m(rows, cols);
  m.data_ = flat;
  return m;
}

Rat Matrix::trace() const {
  Rat t(0);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

Rat Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square");
  Matrix m = *this;
  Rat det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && nlie::is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == rows_) return Rat(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (nlie::is_zero(m.at(i, col))) continue;
      Rat factor = m.at(i, col) / m.at(col, col);
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r.at(i, n + j);
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum length");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  return vec_add(a, vec_scaled(b, Rat(-1)));
}

Vec vec_scaled(const Vec& a, const Rat& c) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& r) { return is_zero(r); });
}

Vec unit_vec(std::size_t dim, std::size_t index) {
  Vec v(dim, Rat(0));
  v.at(index) = 1;
  return v;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < r.rows() && is_zero(r.at(pivot, col))) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < r.cols(); ++j)
        std::swap(r.at(pivot, j), r.at(lead, j));
    Rat inv = Rat(1) / r.at(lead, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || is_zero(r.at(i, col))) continue;
      Rat factor = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        r.at(i, j) -= factor * r.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {r, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

Subspace Subspace::span(const std::vector<Vec>& vectors,
                        std::size_t ambient_dim) {
  for (const Vec& v : vectors)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("span: vector length != ambient dim");
  auto [r, pivots] = rref(Matrix::from_rows(vectors, ambient_dim));
  Subspace s(ambient_dim);
  Matrix basis(pivots.size(), ambient_dim);
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.set_row(i, r.row(i));
  s.basis_ = basis;
  s.pivots_ = pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    rows.push_back(unit_vec(ambient_dim, i));
  return span(rows, ambient_dim);
}

Subspace Subspace::kernel(const Matrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return span(basis, m.cols());
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("reduce: vector length != ambient dim");
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rat& c = w[pivots_[i]];
    if (is_zero(c)) continue;
    Rat factor = c;  // pivot entry is 1
    for (std::size_t j = 0; j < ambient_; ++j)
      w[j] -= factor * basis_.at(i, j);
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("contains: ambient dims differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

Vec Subspace::coordinates_of(const Vec& v) const {
  // Each RREF basis row has a 1 at its pivot column and zeros at the
  // other rows' pivots, so coefficients are read off the pivot entries.
  Vec coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("sum: ambient dims differ");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_row(i));
  for (std::size_t i = 0; i < other.dim(); ++i)
    rows.push_back(other.basis_row(i));
  return span(rows, ambient_);
}

Vec QuotientMap::lift(const Vec& q) const {
  if (q.size() != representatives.size())
    throw std::invalid_argument("lift: coordinate length mismatch");
  Vec v(ambient_dim(), Rat(0));
  for (std::size_t i = 0; i < representatives.size(); ++i)
    v[representatives[i]] = q[i];
  return v;
}

QuotientMap quotient_map(const Subspace& s) {
  std::size_t ambient = s.ambient_dim();
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t p : s.pivot_cols()) is_pivot[p] = true;
  QuotientMap qm;
  for (std::size_t j = 0; j < ambient; ++j)
    if (!is_pivot[j]) qm.representatives.push_back(j);
  Matrix proj(qm.representatives.size(), ambient);
  for (std::size_t j = 0; j < ambient; ++j) {
    Vec residual = s.reduce(unit_vec(ambient, j));
    for (std::size_t i = 0; i < qm.representatives.size(); ++i)
      proj.at(i, j) = residual[qm.representatives[i]];
  }
  qm.projection = std::move(proj);
  return qm;
}

}  // namespace nlie
