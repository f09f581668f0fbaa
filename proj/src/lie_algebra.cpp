#include "nlie/lie_algebra.hpp"

#include <stdexcept>
#include <string>

namespace nlie {

void LieAlgebra::set_bracket(std::size_t a, std::size_t b, const Vec& value) {
  if (a >= b || b >= m_) throw std::invalid_argument("set_bracket: need a < b < dim");
  if (value.size() != m_) throw std::invalid_argument("set_bracket: value length");
  if (vec_is_zero(value))
    c_.erase({a, b});
  else
    c_[{a, b}] = value;
}

Vec LieAlgebra::bracket_basis(std::size_t a, std::size_t b) const {
  if (a == b) return Vec(m_, Rat(0));
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = c_.find({a, b});
  if (it == c_.end()) return Vec(m_, Rat(0));
  return flip ? vec_scaled(it->second, Rat(-1)) : it->second;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != m_ || y.size() != m_)
    throw std::invalid_argument("bracket: vector length");
  Vec out(m_, Rat(0));
  for (const auto& [pair, value] : c_) {
    Rat coeff = x[pair.first] * y[pair.second] - x[pair.second] * y[pair.first];
    if (!is_zero(coeff)) out = vec_add(out, vec_scaled(value, coeff));
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(m_, m_);
  for (std::size_t j = 0; j < m_; ++j)
    m.set_col(j, bracket(x, unit_vec(m_, j)));
  return m;
}

std::vector<std::string> LieAlgebra::check_jacobi() const {
  std::vector<std::string> violations;
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = a + 1; b < m_; ++b)
      for (std::size_t c = b + 1; c < m_; ++c) {
        Vec sum = bracket(unit_vec(m_, a), bracket_basis(b, c));
        sum = vec_add(sum, bracket(unit_vec(m_, b), bracket_basis(c, a)));
        sum = vec_add(sum, bracket(unit_vec(m_, c), bracket_basis(a, b)));
        if (!vec_is_zero(sum))
          violations.push_back("Jacobi fails on basis triple (" +
                               std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
      }
  return violations;
}

Subspace LieAlgebra::center() const {
  Matrix stacked(m_ * m_, m_);
  for (std::size_t j = 0; j < m_; ++j) {
    // x -> [x, e_j]
    for (std::size_t c = 0; c < m_; ++c) {
      Vec b = bracket_basis(c, j);
      for (std::size_t k = 0; k < m_; ++k) stacked.at(j * m_ + k, c) = b[k];
    }
  }
  return Subspace::kernel(stacked);
}

Subspace LieAlgebra::product(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      gens.push_back(bracket(a.basis_row(i), b.basis_row(j)));
  return Subspace::span(gens, m_);
}

std::vector<Subspace> LieAlgebra::derived_series() const {
  std::vector<Subspace> series{Subspace::full(m_)};
  while (true) {
    Subspace next = product(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  Subspace whole = Subspace::full(m_);
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = product(whole, series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

bool LieAlgebra::is_solvable() const { return derived_series().back().dim() == 0; }

bool LieAlgebra::is_nilpotent() const {
  return lower_central_series().back().dim() == 0;
}

bool LieAlgebra::is_abelian() const { return c_.empty(); }

Matrix LieAlgebra::killing_form() const {
  std::vector<Matrix> ads;
  for (std::size_t a = 0; a < m_; ++a) ads.push_back(ad(unit_vec(m_, a)));
  Matrix k(m_, m_);
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = a; b < m_; ++b)
      k.at(a, b) = k.at(b, a) = (ads[a] * ads[b]).trace();
  return k;
}

bool LieAlgebra::is_semisimple() const {
  // Cartan's criterion: nondegenerate Killing form (char 0).
  return !is_zero(killing_form().determinant());
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  if (s.ambient_dim() != m_) throw std::invalid_argument("is_ideal: ambient dim");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < m_; ++j)
      if (!s.contains(bracket(unit_vec(m_, j), s.basis_row(i)))) return false;
  return true;
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  if (s.ambient_dim() != m_)
    throw std::invalid_argument("is_subalgebra: ambient dim");
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(bracket(s.basis_row(i), s.basis_row(j)))) return false;
  return true;
}

Subspace LieAlgebra::normalizer(const Subspace& s) const {
  if (s.ambient_dim() != m_)
    throw std::invalid_argument("normalizer: ambient dim");
  // x normalizes s iff [x, v] reduces to zero mod s for every basis v.
  QuotientMap qm = quotient_map(s);
  std::size_t codim = qm.quotient_dim();
  Matrix system(s.dim() * codim, m_);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec v = s.basis_row(i);
    for (std::size_t c = 0; c < m_; ++c) {
      Vec image = qm.project(bracket(unit_vec(m_, c), v));
      for (std::size_t k = 0; k < codim; ++k)
        system.at(i * codim + k, c) = image[k];
    }
  }
  return Subspace::kernel(system);
}

bool LieAlgebra::is_cartan(const Subspace& s) const {
  if (!is_subalgebra(s)) return false;
  if (!restricted_to(s).is_nilpotent()) return false;
  return normalizer(s) == s;
}

LieAlgebra LieAlgebra::restricted_to(const Subspace& s) const {
  if (!is_subalgebra(s))
    throw std::invalid_argument("restricted_to: not a subalgebra");
  LieAlgebra sub(s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      Vec w = bracket(s.basis_row(a), s.basis_row(b));
      sub.set_bracket(a, b, s.coordinates_of(w));
    }
  return sub;
}

}  // namespace nlie
