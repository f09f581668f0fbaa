#include "nlie/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlie {

std::size_t cochain_space_dim(const QuotientLie& q, std::size_t degree) {
  return binomial(q.lie_dim(), degree) * q.source().dim();
}

Matrix differential_matrix(const QuotientLie& q, std::size_t degree) {
  std::size_t m = q.lie_dim();
  std::size_t d = q.source().dim();
  std::size_t p = degree;
  auto in_tuples = increasing_tuples(m, p);
  auto out_tuples = increasing_tuples(m, p + 1);
  // index lookup for input tuples
  auto tuple_index = [&in_tuples](const Tuple& t) {
    auto it = std::lower_bound(in_tuples.begin(), in_tuples.end(), t);
    return static_cast<std::size_t>(it - in_tuples.begin());
  };

  std::vector<Matrix> adrep_endos;
  adrep_endos.reserve(m);
  for (std::size_t a = 0; a < m; ++a)
    adrep_endos.push_back(Matrix::unflatten(q.adrep().col(a), d, d));

  Matrix out(out_tuples.size() * d, in_tuples.size() * d);
  for (std::size_t oi = 0; oi < out_tuples.size(); ++oi) {
    const Tuple& a = out_tuples[oi];
    // first sum: (-1)^i ad~(a_i) f(a with a_i removed)
    for (std::size_t i = 0; i <= p; ++i) {
      Tuple rest;
      for (std::size_t j = 0; j <= p; ++j)
        if (j != i) rest.push_back(a[j]);
      std::size_t ti = tuple_index(rest);
      const Matrix& endo = adrep_endos[a[i]];
      int sign = (i % 2 == 0) ? 1 : -1;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          if (is_zero(endo.at(r, c))) continue;
          Rat term = endo.at(r, c);
          out.at(oi * d + r, ti * d + c) += (sign == 1 ? term : -term);
        }
    }
    // second sum: (-1)^{i+j} f([a_i,a_j], a with a_i, a_j removed)
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j) {
        Vec bracket = q.lie().bracket_basis(a[i], a[j]);
        Tuple rest;
        for (std::size_t l = 0; l <= p; ++l)
          if (l != i && l != j) rest.push_back(a[l]);
        int base_sign = ((i + j) % 2 == 0) ? 1 : -1;
        for (std::size_t b = 0; b < m; ++b) {
          if (is_zero(bracket[b])) continue;
          int ins = insertion_sign(rest, b);
          if (ins == 0) continue;
          Tuple t = rest;
          t.insert(std::upper_bound(t.begin(), t.end(), b), b);
          std::size_t ti = tuple_index(t);
          Rat coeff = bracket[b] * Rat(base_sign * ins);
          for (std::size_t r = 0; r < d; ++r)
            out.at(oi * d + r, ti * d + r) += coeff;
        }
      }
  }
  return out;
}

Cochain differential(const QuotientLie& q, const Cochain& f) {
  if (f.lie_dim != q.lie_dim() || f.target_dim != q.source().dim() ||
      f.coords.size() != f.space_dim())
    throw std::invalid_argument("cochain does not match quotient dimensions");
  Matrix d = differential_matrix(q, f.degree);
  return Cochain{f.degree + 1, f.lie_dim, f.target_dim, d.apply(f.coords)};
}

bool d_squared_zero(const QuotientLie& q, std::size_t p_max) {
  Matrix prev = differential_matrix(q, 0);
  for (std::size_t p = 0; p < p_max; ++p) {
    Matrix next = differential_matrix(q, p + 1);
    if (!(next * prev).is_zero()) return false;
    prev = std::move(next);
  }
  return true;
}

std::vector<CohomologyRow> cohomology_dims(const QuotientLie& q,
                                           std::size_t p_max) {
  std::vector<CohomologyRow> rows;
  std::size_t prev_rank = 0;  // the degree -1 map is zero
  for (std::size_t p = 0; p <= p_max; ++p) {
    Matrix d = differential_matrix(q, p);
    std::size_t space = cochain_space_dim(q, p);
    std::size_t r = rank(d);
    std::size_t ker = space - r;
    rows.push_back({p, space, r, ker, ker - prev_rank});
    prev_rank = r;
  }
  return rows;
}

}  // namespace nlie
