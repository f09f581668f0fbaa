#ifndef NLIE_COHOMOLOGY_HPP
#define NLIE_COHOMOLOGY_HPP

#include "nlie/quotient.hpp"

namespace nlie {

/// Skew p-multilinear map from the quotient Lie algebra to the source
/// algebra, stored densely on increasing p-tuples. Coordinates are
/// tuple-major: position tuple_index * d + target_coordinate.
struct Cochain {
  std::size_t degree;
  std::size_t lie_dim;
  std::size_t target_dim;
  Vec coords;  // length C(lie_dim, degree) * target_dim

  std::size_t space_dim() const {
    return binomial(lie_dim, degree) * target_dim;
  }
};

std::size_t cochain_space_dim(const QuotientLie& q, std::size_t degree);

/// The Chevalley-Eilenberg differential for the representation carried
/// by the quotient, assembled as an explicit matrix from degree p to
/// degree p+1 cochains:
/// (df)(a_0..a_p) = sum_i (-1)^i ad~(a_i) f(..a_i-hat..)
///                + sum_{i<j} (-1)^{i+j} f([a_i,a_j], ..a_i-hat..a_j-hat..).
Matrix differential_matrix(const QuotientLie& q, std::size_t degree);

Cochain differential(const QuotientLie& q, const Cochain& f);

/// d o d == 0 as exact matrix products in every degree <= p_max.
bool d_squared_zero(const QuotientLie& q, std::size_t p_max);

struct CohomologyRow {
  std::size_t degree;
  std::size_t cochain_dim;
  std::size_t rank_d;    // rank of the differential out of this degree
  std::size_t kernel_dim;
  std::size_t h_dim;     // kernel_dim minus rank of the incoming map
};

std::vector<CohomologyRow> cohomology_dims(const QuotientLie& q,
                                           std::size_t p_max);

}  // namespace nlie

#endif
