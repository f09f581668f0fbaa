#include "nlie/tuples.hpp"

namespace nlie {

std::vector<Tuple> increasing_tuples(std::size_t d, std::size_t k) {
  std::vector<Tuple> out;
  if (k > d) return out;
  Tuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    if (k == 0) break;
    // advance to the next increasing tuple
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (t[i] < d - (k - i)) break;
      if (i == 0) return out;
    }
    if (t[i] >= d - (k - i)) return out;
    ++t[i];
    for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t d, std::size_t k) {
  if (k > d) return 0;
  if (k > d - k) k = d - k;
  std::size_t result = 1;
  for (std::size_t i = 0; i < k; ++i) result = result * (d - i) / (i + 1);
  return result;
}

int sort_with_sign(Tuple& t) {
  int sign = 1;
  // insertion sort, counting swaps
  for (std::size_t i = 1; i < t.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && t[j - 1] > t[j]) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) return 0;
  return sign;
}

int insertion_sign(const Tuple& sorted, std::size_t x) {
  int sign = 1;
  for (std::size_t v : sorted) {
    if (v == x) return 0;
    if (v < x) sign = -sign;
  }
  return sign;
}

}  // namespace nlie
