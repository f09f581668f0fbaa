#include "nlie/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlie {

ExtBasis::ExtBasis(std::size_t d, std::size_t degree)
    : d_(d), k_(degree), subsets_(increasing_tuples(d, degree)) {}

std::size_t ExtBasis::index_of(const Tuple& increasing_subset) const {
  auto it = std::lower_bound(subsets_.begin(), subsets_.end(), increasing_subset);
  if (it == subsets_.end() || *it != increasing_subset)
    throw std::invalid_argument("not a basis subset");
  return static_cast<std::size_t>(it - subsets_.begin());
}

std::string ExtBasis::label(std::size_t index,
                            const std::vector<std::string>& names) const {
  const Tuple& t = subsets_[index];
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += "^";
    out += t[i] < names.size() ? names[t[i]] : "e" + std::to_string(t[i] + 1);
  }
  return out;
}

Vec ExtBasis::wedge(const std::vector<Vec>& vectors) const {
  if (vectors.size() != k_)
    throw std::invalid_argument("wedge: wrong number of factors");
  for (const Vec& v : vectors)
    if (v.size() != d_) throw std::invalid_argument("wedge: factor length");
  Vec out(size(), Rat(0));
  for (std::size_t idx = 0; idx < size(); ++idx) {
    const Tuple& s = subsets_[idx];
    Matrix minor(k_, k_);
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t c = 0; c < k_; ++c) minor.at(r, c) = vectors[r][s[c]];
    out[idx] = minor.determinant();
  }
  return out;
}

Matrix ExtBasis::extend_derivation(const Matrix& f) const {
  if (f.rows() != d_ || f.cols() != d_)
    throw std::invalid_argument("extend_derivation: endomorphism size");
  Matrix out(size(), size());
  for (std::size_t col = 0; col < size(); ++col) {
    const Tuple& s = subsets_[col];
    for (std::size_t slot = 0; slot < k_; ++slot) {
      // replace e_{s[slot]} by f(e_{s[slot]}) = sum_m f(m, s[slot]) e_m
      Tuple rest;
      for (std::size_t j = 0; j < k_; ++j)
        if (j != slot) rest.push_back(s[j]);
      for (std::size_t m = 0; m < d_; ++m) {
        const Rat& coeff = f.at(m, s[slot]);
        if (is_zero(coeff)) continue;
        // parity of moving e_m from position `slot` into sorted order
        int sign = insertion_sign(rest, m);
        if (sign == 0) continue;
        if (slot % 2 == 1) sign = -sign;
        Tuple sorted = rest;
        sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), m), m);
        out.at(index_of(sorted), col) += (sign == 1 ? coeff : -coeff);
      }
    }
  }
  return out;
}

Matrix ad_ext(const NLieAlgebra& g, const ExtBasis& basis) {
  std::size_t d = g.dim();
  if (basis.ambient_dim() != d || basis.degree() != g.arity() - 1)
    throw std::invalid_argument("ad_ext: basis does not match algebra");
  Matrix out(d * d, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
    out.set_col(col, g.ad_basis(basis.subset(col)).flatten());
  return out;
}

}  // namespace nlie
