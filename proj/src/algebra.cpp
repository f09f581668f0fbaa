#include "nlie/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace nlie {

namespace {

std::vector<std::string> default_names(std::size_t d) {
  std::vector<std::string> names;
  names.reserve(d);
  for (std::size_t i = 0; i < d; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

}  // namespace

NLieAlgebra::NLieAlgebra(std::size_t arity, std::size_t dim,
                         std::vector<std::string> basis_names)
    : n_(arity), d_(dim), names_(std::move(basis_names)) {
  if (n_ < 2) throw std::invalid_argument("arity must be >= 2");
  if (names_.empty()) names_ = default_names(d_);
  if (names_.size() != d_)
    throw std::invalid_argument("basis name count != dim");
}

void NLieAlgebra::set_bracket(const Tuple& t, const Vec& value) {
  if (t.size() != n_) throw std::invalid_argument("bracket tuple arity");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= d_) throw std::invalid_argument("bracket tuple index out of range");
    if (i > 0 && t[i - 1] >= t[i])
      throw std::invalid_argument("bracket tuple not strictly increasing");
  }
  if (value.size() != d_) throw std::invalid_argument("bracket value length");
  if (vec_is_zero(value))
    structure_.erase(t);
  else
    structure_[t] = value;
}

Vec NLieAlgebra::bracket_basis(const Tuple& indices) const {
  if (indices.size() != n_) throw std::invalid_argument("bracket arity");
  Tuple sorted = indices;
  int sign = sort_with_sign(sorted);
  if (sign == 0) return Vec(d_, Rat(0));
  auto it = structure_.find(sorted);
  if (it == structure_.end()) return Vec(d_, Rat(0));
  return sign == 1 ? it->second : vec_scaled(it->second, Rat(-1));
}

Vec NLieAlgebra::bracket(const std::vector<Vec>& args) const {
  if (args.size() != n_) throw std::invalid_argument("bracket arity");
  for (const Vec& a : args)
    if (a.size() != d_) throw std::invalid_argument("bracket argument length");
  Vec out(d_, Rat(0));
  // multilinear expansion: the coefficient of the basis bracket at an
  // increasing tuple I is the minor det(args[r][I[c]])
  for (const auto& [tuple, value] : structure_) {
    Matrix minor(n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) minor.at(r, c) = args[r][tuple[c]];
    Rat coeff = minor.determinant();
    if (is_zero(coeff)) continue;
    out = vec_add(out, vec_scaled(value, coeff));
  }
  return out;
}

std::vector<FilippovViolation> NLieAlgebra::check_filippov() const {
  std::vector<FilippovViolation> violations;
  auto xs = increasing_tuples(d_, n_ - 1);
  auto ys = increasing_tuples(d_, n_);
  for (const Tuple& x : xs) {
    for (const Tuple& y : ys) {
      // lhs = {e_x, {e_y}}
      std::vector<Vec> lhs_args;
      for (std::size_t i : x) lhs_args.push_back(unit_vec(d_, i));
      lhs_args.push_back(bracket_basis(y));
      Vec lhs = bracket(lhs_args);
      // rhs = sum_i {e_y1, ..., {e_x, e_yi}, ..., e_yn}
      Vec rhs(d_, Rat(0));
      for (std::size_t i = 0; i < n_; ++i) {
        Tuple inner = x;
        inner.push_back(y[i]);
        Vec z = bracket_basis(inner);
        std::vector<Vec> rhs_args;
        for (std::size_t j = 0; j < n_; ++j)
          rhs_args.push_back(j == i ? z : unit_vec(d_, y[j]));
        rhs = vec_add(rhs, bracket(rhs_args));
      }
      Vec residual = vec_sub(lhs, rhs);
      if (!vec_is_zero(residual)) violations.push_back({x, y, residual});
    }
  }
  return violations;
}

Matrix NLieAlgebra::ad(const std::vector<Vec>& args) const {
  if (args.size() != n_ - 1) throw std::invalid_argument("ad takes n-1 arguments");
  Matrix m(d_, d_);
  std::vector<Vec> full = args;
  full.push_back(Vec());
  for (std::size_t j = 0; j < d_; ++j) {
    full.back() = unit_vec(d_, j);
    m.set_col(j, bracket(full));
  }
  return m;
}

Matrix NLieAlgebra::ad_basis(const Tuple& indices) const {
  std::vector<Vec> args;
  for (std::size_t i : indices) args.push_back(unit_vec(d_, i));
  return ad(args);
}

bool NLieAlgebra::is_derivation(const Matrix& endo) const {
  if (endo.rows() != d_ || endo.cols() != d_)
    throw std::invalid_argument("endomorphism size mismatch");
  for (const Tuple& t : increasing_tuples(d_, n_)) {
    Vec lhs = endo.apply(bracket_basis(t));
    Vec rhs(d_, Rat(0));
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<Vec> args;
      for (std::size_t k = 0; k < n_; ++k)
        args.push_back(k == j ? endo.col(t[j]) : unit_vec(d_, t[k]));
      rhs = vec_add(rhs, bracket(args));
    }
    if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
  }
  return true;
}

Subspace NLieAlgebra::derivations() const {
  // Unknowns: M(r,c) at flat index r*d + c. One equation per
  // (increasing n-tuple, output coordinate).
  auto tuples = increasing_tuples(d_, n_);
  Matrix system(tuples.size() * d_, d_ * d_);
  std::size_t row = 0;
  for (const Tuple& t : tuples) {
    Vec b = bracket_basis(t);
    for (std::size_t k = 0; k < d_; ++k) {
      // M applied to the bracket value
      for (std::size_t m = 0; m < d_; ++m)
        system.at(row + k, k * d_ + m) += b[m];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t m = 0; m < d_; ++m) {
        Tuple sub = t;
        sub[j] = m;
        Vec w = bracket_basis(sub);
        if (vec_is_zero(w)) continue;
        for (std::size_t k = 0; k < d_; ++k)
          system.at(row + k, m * d_ + t[j]) -= w[k];
      }
    }
    row += d_;
  }
  return Subspace::kernel(system);
}

Subspace NLieAlgebra::invariants() const {
  auto tuples = increasing_tuples(d_, n_ - 1);
  Matrix stacked(tuples.size() * d_, d_);
  std::size_t row = 0;
  for (const Tuple& t : tuples) {
    for (std::size_t c = 0; c < d_; ++c) {
      Tuple full;
      full.push_back(c);
      for (std::size_t i : t) full.push_back(i);
      Vec b = bracket_basis(full);
      for (std::size_t k = 0; k < d_; ++k) stacked.at(row + k, c) = b[k];
    }
    row += d_;
  }
  return Subspace::kernel(stacked);
}

bool NLieAlgebra::is_stable(const Subspace& s) const {
  if (s.ambient_dim() != d_)
    throw std::invalid_argument("subspace ambient dim mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec x = s.basis_row(i);
    for (const Tuple& t : increasing_tuples(d_, n_ - 1)) {
      std::vector<Vec> args;
      args.push_back(x);
      for (std::size_t j : t) args.push_back(unit_vec(d_, j));
      if (!s.contains(bracket(args))) return false;
    }
  }
  return true;
}

bool is_nlie_morphism(const NLieAlgebra& g, const NLieAlgebra& h,
                      const Matrix& phi) {
  if (g.arity() != h.arity())
    throw std::invalid_argument("morphism: arity mismatch");
  if (phi.rows() != h.dim() || phi.cols() != g.dim())
    throw std::invalid_argument("morphism: matrix shape mismatch");
  for (const Tuple& t : increasing_tuples(g.dim(), g.arity())) {
    Vec lhs = phi.apply(g.bracket_basis(t));
    std::vector<Vec> images;
    for (std::size_t i : t) images.push_back(phi.col(i));
    Vec rhs = h.bracket(images);
    if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
  }
  return true;
}

NLieAlgebra make_abelian(std::size_t arity, std::size_t dim) {
  return NLieAlgebra(arity, dim);
}

NLieAlgebra make_sl2() {
  NLieAlgebra g(2, 3, {"e", "f", "h"});
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  g.set_bracket({0, 1}, {rat(0), rat(0), rat(1)});
  g.set_bracket({0, 2}, {rat(-2), rat(0), rat(0)});
  g.set_bracket({1, 2}, {rat(0), rat(2), rat(0)});
  return g;
}

NLieAlgebra make_heisenberg3() {
  NLieAlgebra g(2, 3, {"x", "y", "z"});
  g.set_bracket({0, 1}, {rat(0), rat(0), rat(1)});
  return g;
}

NLieAlgebra make_simple_nlie(std::size_t arity) {
  std::size_t d = arity + 1;
  NLieAlgebra g(arity, d);
  for (std::size_t omit = 0; omit < d; ++omit) {
    Tuple t;
    for (std::size_t i = 0; i < d; ++i)
      if (i != omit) t.push_back(i);
    Vec v(d, Rat(0));
    // 1-based: {e_1,...,e_i-hat,...,e_{n+1}} = (-1)^{n+1-i} e_i
    v[omit] = ((d - (omit + 1)) % 2 == 0) ? rat(1) : rat(-1);
    g.set_bracket(t, v);
  }
  return g;
}

NLieAlgebra builtin(const std::string& name) {
  auto validated = [](NLieAlgebra g) {
    if (!g.is_valid())
      throw std::logic_error("builtin algebra failed Filippov validation");
    return g;
  };
  if (name == "sl2") return validated(make_sl2());
  if (name == "heisenberg3") return validated(make_heisenberg3());
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    std::string args = name.substr(colon + 1);
    std::istringstream in(args);
    if (head == "abelian") {
      std::size_t n = 0, d = 0;
      char comma = 0;
      if (!(in >> n >> comma >> d) || comma != ',' || n < 2)
        throw std::invalid_argument("bad builtin arguments: " + name);
      return validated(make_abelian(n, d));
    }
    if (head == "simple") {
      std::size_t n = 0;
      if (!(in >> n) || n < 2)
        throw std::invalid_argument("bad builtin arguments: " + name);
      return validated(make_simple_nlie(n));
    }
  }
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

NLieAlgebra change_basis(const NLieAlgebra& g, const Matrix& p) {
  if (p.rows() != g.dim() || p.cols() != g.dim())
    throw std::invalid_argument("change of basis: matrix shape");
  Matrix pinv = inverse(p);
  NLieAlgebra out(g.arity(), g.dim());
  for (const Tuple& t : increasing_tuples(g.dim(), g.arity())) {
    std::vector<Vec> args;
    for (std::size_t i : t) args.push_back(p.col(i));
    Vec value = pinv.apply(g.bracket(args));
    out.set_bracket(t, value);
  }
  return out;
}

}  // namespace nlie
