#ifndef NLIE_ALGEBRA_HPP
#define NLIE_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "nlie/linalg.hpp"
#include "nlie/tuples.hpp"

namespace nlie {

/// One failed instance of the fundamental identity: the (n-1)-tuple of
/// outer arguments, the inner n-tuple, and the nonzero residual vector.
struct FilippovViolation {
  Tuple x_tuple;
  Tuple y_tuple;
  Vec residual;
};

/// Finite-dimensional n-Lie algebra given by structure constants on
/// strictly increasing basis n-tuples. Skew-symmetry is built into the
/// storage; the fundamental identity is checked separately.
class NLieAlgebra {
 public:
  NLieAlgebra(std::size_t arity, std::size_t dim,
              std::vector<std::string> basis_names = {});

  std::size_t arity() const { return n_; }
  std::size_t dim() const { return d_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::map<Tuple, Vec>& structure() const { return structure_; }

  /// Sets {e_{t[0]},...,e_{t[n-1]}} = value for a strictly increasing t.
  void set_bracket(const Tuple& t, const Vec& value);

  /// Bracket of basis vectors; indices may be unsorted or repeat.
  Vec bracket_basis(const Tuple& indices) const;

  /// Bracket of arbitrary vectors, by multilinear expansion over minors.
  Vec bracket(const std::vector<Vec>& args) const;

  std::vector<FilippovViolation> check_filippov() const;
  bool is_valid() const { return check_filippov().empty(); }

  /// The inner derivation y -> {x_1,...,x_{n-1},y} as a d x d matrix.
  Matrix ad(const std::vector<Vec>& args) const;
  Matrix ad_basis(const Tuple& indices) const;

  bool is_derivation(const Matrix& endo) const;

  /// Der(G) as a subspace of endomorphism space (row-major flattening).
  Subspace derivations() const;

  /// Inv(G) = {x : {x, y_1,...,y_{n-1}} = 0 for all y}.
  Subspace invariants() const;

  /// Whether {x, e_{j_1},...,e_{j_{n-1}}} stays in s for every basis row
  /// x of s and every increasing basis (n-1)-tuple.
  bool is_stable(const Subspace& s) const;

 private:
  std::size_t n_, d_;
  std::vector<std::string> names_;
  std::map<Tuple, Vec> structure_;  // increasing tuples only, zero omitted
};

bool is_nlie_morphism(const NLieAlgebra& g, const NLieAlgebra& h,
                      const Matrix& phi);

// Built-in algebras. Each is Filippov-validated at construction.
NLieAlgebra make_abelian(std::size_t arity, std::size_t dim);
NLieAlgebra make_sl2();
NLieAlgebra make_heisenberg3();
/// The (n+1)-dimensional simple n-Lie algebra:
/// {e_1,...,e_i-hat,...,e_{n+1}} = (-1)^{n+1-i} e_i.
NLieAlgebra make_simple_nlie(std::size_t arity);

/// Resolves a builtin name: "sl2", "heisenberg3", "abelian:n,d",
/// "simple:n". Throws std::invalid_argument on unknown names.
NLieAlgebra builtin(const std::string& name);

/// Change of basis: f_j = sum_i P(i,j) e_i for invertible P; returns the
/// structure constants of the same algebra in the f basis.
NLieAlgebra change_basis(const NLieAlgebra& g, const Matrix& p);

}  // namespace nlie

#endif
