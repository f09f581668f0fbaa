#ifndef NLIE_LIE_ALGEBRA_HPP
#define NLIE_LIE_ALGEBRA_HPP

#include <map>
#include <utility>
#include <vector>

#include "nlie/linalg.hpp"

namespace nlie {

/// Finite-dimensional Lie algebra given by antisymmetric structure
/// constants, stored on pairs a < b only.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim) : m_(dim) {}

  std::size_t dim() const { return m_; }
  const std::map<std::pair<std::size_t, std::size_t>, Vec>& structure() const {
    return c_;
  }

  void set_bracket(std::size_t a, std::size_t b, const Vec& value);
  Vec bracket_basis(std::size_t a, std::size_t b) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  /// ad(x) as an m x m matrix, y -> [x, y].
  Matrix ad(const Vec& x) const;

  /// Empty iff antisymmetry and the Jacobi identity hold on basis triples.
  std::vector<std::string> check_jacobi() const;

  Subspace center() const;
  /// Span of [a, b] over basis rows of a and b.
  Subspace product(const Subspace& a, const Subspace& b) const;
  std::vector<Subspace> derived_series() const;
  std::vector<Subspace> lower_central_series() const;
  bool is_solvable() const;
  bool is_nilpotent() const;
  bool is_abelian() const;

  Matrix killing_form() const;
  bool is_semisimple() const;

  bool is_ideal(const Subspace& s) const;
  bool is_subalgebra(const Subspace& s) const;
  Subspace normalizer(const Subspace& s) const;
  /// Subalgebra, nilpotent as a Lie algebra in its own right, and
  /// self-normalizing.
  bool is_cartan(const Subspace& s) const;

  /// The Lie algebra structure induced on a subalgebra s, in the
  /// coordinates of its RREF basis rows.
  LieAlgebra restricted_to(const Subspace& s) const;

 private:
  std::size_t m_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> c_;
};

}  // namespace nlie

#endif
