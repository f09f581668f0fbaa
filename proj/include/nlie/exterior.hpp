#ifndef NLIE_EXTERIOR_HPP
#define NLIE_EXTERIOR_HPP

#include "nlie/algebra.hpp"
#include "nlie/linalg.hpp"
#include "nlie/tuples.hpp"

namespace nlie {

/// Canonical basis of the k-th exterior power of Q^d: strictly increasing
/// k-subsets of {0,...,d-1} in lexicographic order.
class ExtBasis {
 public:
  ExtBasis(std::size_t d, std::size_t degree);

  std::size_t ambient_dim() const { return d_; }
  std::size_t degree() const { return k_; }
  std::size_t size() const { return subsets_.size(); }
  const Tuple& subset(std::size_t index) const { return subsets_[index]; }
  const std::vector<Tuple>& subsets() const { return subsets_; }
  std::size_t index_of(const Tuple& increasing_subset) const;

  /// Human-readable label "e1^e2^..." for a basis wedge.
  std::string label(std::size_t index,
                    const std::vector<std::string>& names) const;

  /// Coordinates of x_1 ^ ... ^ x_k over this basis.
  Vec wedge(const std::vector<Vec>& vectors) const;

  /// The degree-zero derivation extension of an endomorphism f of Q^d,
  /// acting on basis wedges by the Leibniz sum
  /// D_f(w_1^...^w_k) = sum_i w_1^...^f(w_i)^...^w_k.
  Matrix extend_derivation(const Matrix& f) const;

 private:
  std::size_t d_, k_;
  std::vector<Tuple> subsets_;
};

/// The linearization of the ad map: a (d*d) x C(d,n-1) matrix whose
/// column at the basis wedge {i_1<...<i_{n-1}} is the flattened inner
/// derivation ad(e_{i_1},...,e_{i_{n-1}}).
Matrix ad_ext(const NLieAlgebra& g, const ExtBasis& basis);

}  // namespace nlie

#endif
