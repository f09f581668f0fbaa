#ifndef NLIE_QUOTIENT_HPP
#define NLIE_QUOTIENT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/exterior.hpp"
#include "nlie/lie_algebra.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

/// The relation subspace of the (n-1)-st exterior power: span of
/// D_{ad(s1)}(s2) + D_{ad(s2)}(s1) over basis wedges s1, s2.
Subspace compute_relations(const NLieAlgebra& g);

struct LieCheckViolation {
  std::vector<std::size_t> indices;  // offending basis pair or triple
  Vec residual;
};

/// The Lie algebra attached to an n-Lie algebra: the quotient of the
/// (n-1)-st exterior power by the relation subspace, with the induced
/// bracket and the representation back on the source algebra.
class QuotientLie {
 public:
  static QuotientLie build(const NLieAlgebra& g);

  const NLieAlgebra& source() const { return source_; }
  const ExtBasis& ext_basis() const { return ext_; }
  std::size_t ext_dim() const { return ext_.size(); }
  const Subspace& relations() const { return relations_; }
  const QuotientMap& projection() const { return qm_; }
  std::size_t lie_dim() const { return lie_.dim(); }
  const LieAlgebra& lie() const { return lie_; }
  /// Flattened endomorphism per quotient basis element, d*d x lie_dim.
  const Matrix& adrep() const { return adrep_; }
  const Matrix& ad_ext_matrix() const { return ad_ext_; }

  /// Bracket on quotient coordinates via the materialized constants.
  Vec bracket(const Vec& x, const Vec& y) const { return lie_.bracket(x, y); }

  /// Bracket computed from exterior lifts: project(D_{ad(lift1)}(lift2)).
  Vec bracket_from_lifts(const Vec& ext1, const Vec& ext2) const;

  std::vector<LieCheckViolation> check_lie() const;
  bool check_ad_well_defined() const;
  bool check_ad_morphism() const;

  /// Image in the quotient of the exterior power of a subspace of the
  /// source: span of projected wedges of basis-row tuples.
  Subspace push_subspace(const Subspace& s) const;

  bool is_nlie_ideal(const Subspace& s) const;
  bool is_nlie_cartan(const Subspace& s) const;

  // n-Lie structural notions, read off the quotient Lie algebra.
  bool is_semisimple() const { return lie_.is_semisimple(); }
  bool is_solvable() const { return lie_.is_solvable(); }
  bool is_nilpotent() const { return lie_.is_nilpotent(); }
  bool is_abelian() const { return lie_.is_abelian(); }

 private:
  QuotientLie(NLieAlgebra g, ExtBasis ext)
      : source_(std::move(g)),
        ext_(std::move(ext)),
        relations_(0),
        lie_(0) {}

  NLieAlgebra source_;
  ExtBasis ext_;
  Matrix ad_ext_;     // d*d x ext_dim
  Subspace relations_;
  QuotientMap qm_;
  LieAlgebra lie_;
  Matrix adrep_;      // d*d x lie_dim
};

struct MorphismError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Functorial image of an n-Lie morphism phi: source(q) -> source(q2) on
/// the quotient Lie algebras. Throws MorphismError when phi is not an
/// n-Lie morphism; throws std::logic_error if the exterior image fails
/// to preserve the relation subspaces (which functoriality forbids).
Matrix induced_lie_morphism(const QuotientLie& q, const QuotientLie& q2,
                            const Matrix& phi);

}  // namespace nlie

#endif
