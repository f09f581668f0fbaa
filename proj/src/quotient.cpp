#include "nlie/quotient.hpp"

namespace nlie {

namespace {

/// D_{ad(e_a)} as a matrix on the exterior space, for a basis wedge a.
Matrix extension_of_basis_wedge(const ExtBasis& ext, const Matrix& ad_ext_mat,
                                std::size_t a, std::size_t d) {
  Matrix endo = Matrix::unflatten(ad_ext_mat.col(a), d, d);
  return ext.extend_derivation(endo);
}

}  // namespace

Subspace compute_relations(const NLieAlgebra& g) {
  ExtBasis ext(g.dim(), g.arity() - 1);
  Matrix adm = ad_ext(g, ext);
  std::size_t d = g.dim();
  std::vector<Matrix> extensions;
  extensions.reserve(ext.size());
  for (std::size_t a = 0; a < ext.size(); ++a)
    extensions.push_back(extension_of_basis_wedge(ext, adm, a, d));
  // generators D_{ad(e_a)}(e_b) + D_{ad(e_b)}(e_a); the expression is
  // symmetric bilinear, so basis pairs a <= b span the full set
  std::vector<Vec> gens;
  for (std::size_t a = 0; a < ext.size(); ++a)
    for (std::size_t b = a; b < ext.size(); ++b)
      gens.push_back(vec_add(extensions[a].col(b), extensions[b].col(a)));
  return Subspace::span(gens, ext.size());
}

QuotientLie QuotientLie::build(const NLieAlgebra& g) {
  QuotientLie q(g, ExtBasis(g.dim(), g.arity() - 1));
  std::size_t d = g.dim();
  q.ad_ext_ = ad_ext(g, q.ext_);
  q.relations_ = compute_relations(g);
  q.qm_ = quotient_map(q.relations_);
  std::size_t m = q.qm_.quotient_dim();

  q.lie_ = LieAlgebra(m);
  const auto& reps = q.qm_.representatives;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      // [a, b] = class of D_{ad(lift a)}(lift b), lifts = representative
      // basis wedges
      Matrix ext_a = extension_of_basis_wedge(q.ext_, q.ad_ext_, reps[a], d);
      q.lie_.set_bracket(a, b, q.qm_.project(ext_a.col(reps[b])));
    }

  q.adrep_ = Matrix(d * d, m);
  for (std::size_t a = 0; a < m; ++a)
    q.adrep_.set_col(a, q.ad_ext_.col(reps[a]));
  return q;
}

Vec QuotientLie::bracket_from_lifts(const Vec& ext1, const Vec& ext2) const {
  std::size_t d = source_.dim();
  Matrix endo(d, d);
  // ad of ext1 by linearity
  Vec flat = ad_ext_.apply(ext1);
  Matrix extension = ext_.extend_derivation(Matrix::unflatten(flat, d, d));
  return qm_.project(extension.apply(ext2));
}

std::vector<LieCheckViolation> QuotientLie::check_lie() const {
  std::vector<LieCheckViolation> violations;
  std::size_t m = lie_.dim();
  // antisymmetry against the lift computation (storage alone makes the
  // materialized constants antisymmetric)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec lift_a = unit_vec(ext_.size(), qm_.representatives[a]);
      Vec lift_b = unit_vec(ext_.size(), qm_.representatives[b]);
      Vec residual = vec_add(bracket_from_lifts(lift_a, lift_b),
                             bracket_from_lifts(lift_b, lift_a));
      if (!vec_is_zero(residual)) violations.push_back({{a, b}, residual});
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        Vec sum = lie_.bracket(unit_vec(m, a), lie_.bracket_basis(b, c));
        sum = vec_add(sum, lie_.bracket(unit_vec(m, b), lie_.bracket_basis(c, a)));
        sum = vec_add(sum, lie_.bracket(unit_vec(m, c), lie_.bracket_basis(a, b)));
        if (!vec_is_zero(sum)) violations.push_back({{a, b, c}, sum});
      }
  return violations;
}

bool QuotientLie::check_ad_well_defined() const {
  for (std::size_t i = 0; i < relations_.dim(); ++i)
    if (!vec_is_zero(ad_ext_.apply(relations_.basis_row(i)))) return false;
  return true;
}

bool QuotientLie::check_ad_morphism() const {
  std::size_t d = source_.dim();
  std::size_t m = lie_.dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Matrix ea = Matrix::unflatten(adrep_.col(a), d, d);
      Matrix eb = Matrix::unflatten(adrep_.col(b), d, d);
      Vec lhs = commutator(ea, eb).flatten();
      Vec rhs = adrep_.apply(lie_.bracket_basis(a, b));
      if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
    }
  return true;
}

Subspace QuotientLie::push_subspace(const Subspace& s) const {
  if (s.ambient_dim() != source_.dim())
    throw std::invalid_argument("push_subspace: ambient dim mismatch");
  std::size_t k = source_.arity() - 1;
  std::vector<Vec> images;
  for (const Tuple& t : increasing_tuples(s.dim(), k)) {
    std::vector<Vec> factors;
    for (std::size_t i : t) factors.push_back(s.basis_row(i));
    images.push_back(qm_.project(ext_.wedge(factors)));
  }
  return Subspace::span(images, lie_.dim());
}

bool QuotientLie::is_nlie_ideal(const Subspace& s) const {
  return lie_.is_ideal(push_subspace(s));
}

bool QuotientLie::is_nlie_cartan(const Subspace& s) const {
  return lie_.is_cartan(push_subspace(s));
}

Matrix induced_lie_morphism(const QuotientLie& q, const QuotientLie& q2,
                            const Matrix& phi) {
  if (!is_nlie_morphism(q.source(), q2.source(), phi))
    throw MorphismError("map is not an n-Lie algebra morphism");
  const ExtBasis& src = q.ext_basis();
  const ExtBasis& dst = q2.ext_basis();
  // exterior power of phi on basis wedges
  Matrix ext_phi(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    std::vector<Vec> images;
    for (std::size_t i : src.subset(col)) images.push_back(phi.col(i));
    ext_phi.set_col(col, dst.wedge(images));
  }
  for (std::size_t i = 0; i < q.relations().dim(); ++i)
    if (!q2.relations().contains(ext_phi.apply(q.relations().basis_row(i))))
      throw std::logic_error(
          "functoriality violation: relations not preserved by the exterior map");
  std::size_t m = q.lie_dim();
  Matrix descended(q2.lie_dim(), m);
  for (std::size_t a = 0; a < m; ++a) {
    Vec lift = unit_vec(src.size(), q.projection().representatives[a]);
    descended.set_col(a, q2.projection().project(ext_phi.apply(lift)));
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec lhs = descended.apply(q.lie().bracket_basis(a, b));
      Vec rhs = q2.bracket(descended.col(a), descended.col(b));
      if (!vec_is_zero(vec_sub(lhs, rhs)))
        throw std::logic_error(
            "functoriality violation: induced map is not a Lie morphism");
    }
  return descended;
}

}  // namespace nlie
