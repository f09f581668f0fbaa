#ifndef NLIE_TUPLES_HPP
#define NLIE_TUPLES_HPP

#include <cstddef>
#include <vector>

namespace nlie {

using Tuple = std::vector<std::size_t>;

/// All strictly increasing k-tuples from {0,...,d-1}, in lexicographic
/// order. Empty list when k > d; the single empty tuple when k == 0.
std::vector<Tuple> increasing_tuples(std::size_t d, std::size_t k);

/// Binomial coefficient C(d, k).
std::size_t binomial(std::size_t d, std::size_t k);

/// Sorts a tuple of indices; returns +1/-1 for the permutation parity or
/// 0 when an index repeats. The tuple is sorted in place.
int sort_with_sign(Tuple& t);

/// Sign (-1)^m where m is the number of elements of the sorted tuple that
/// are smaller than x, i.e. the parity of moving x from the front into
/// sorted position. Returns 0 when x already occurs in the tuple.
int insertion_sign(const Tuple& sorted, std::size_t x);

}  // namespace nlie

#endif
