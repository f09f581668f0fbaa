#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nlie/algebra.hpp"
#include "support/generators.hpp"

using namespace nlie;
using nlie::testing::random_vec;
using nlie::testing::random_vecs;
using nlie::testing::rng;

TEST_CASE("sl2 bracket reads the structure table") {
  NLieAlgebra g = make_sl2();
  // [h, e] = 2e
  Vec v = g.bracket({unit_vec(3, 2), unit_vec(3, 0)});
  CHECK(v == Vec{rat(2), rat(0), rat(0)});
}

TEST_CASE("sl2 bracket expands bilinearly") {
  NLieAlgebra g = make_sl2();
  // [e+h, f] = [e,f] + [h,f] = h - 2f
  Vec x = {rat(1), rat(0), rat(1)};
  Vec v = g.bracket({x, unit_vec(3, 1)});
  CHECK(v == Vec{rat(0), rat(-2), rat(1)});
}

TEST_CASE("bracket with a repeated argument vanishes") {
  NLieAlgebra g = make_simple_nlie(3);
  Vec x = random_vec(4), y = random_vec(4);
  CHECK(vec_is_zero(g.bracket({x, y, x})));
}

TEST_CASE("bracket is skew under permutations") {
  NLieAlgebra g = make_simple_nlie(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto args = random_vecs(3, 4);
    Tuple perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng());
    Tuple parity = perm;
    int sign = sort_with_sign(parity);
    std::vector<Vec> permuted;
    for (std::size_t i : perm) permuted.push_back(args[i]);
    Vec expect = vec_scaled(g.bracket(permuted), rat(sign));
    CHECK(g.bracket(args) == expect);
  }
}

TEST_CASE("bracket is multilinear") {
  NLieAlgebra g = make_sl2();
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = random_vec(3), y = random_vec(3), z = random_vec(3);
    Rat a = nlie::testing::random_rat();
    Vec lhs = g.bracket({vec_add(vec_scaled(x, a), y), z});
    Vec rhs = vec_add(vec_scaled(g.bracket({x, z}), a), g.bracket({y, z}));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Filippov check accepts the valid examples") {
  CHECK(make_abelian(3, 5).check_filippov().empty());
  CHECK(make_sl2().check_filippov().empty());
  CHECK(make_heisenberg3().check_filippov().empty());
  CHECK(make_simple_nlie(3).check_filippov().empty());
}

TEST_CASE("Filippov check reports a perturbed sl2") {
  NLieAlgebra g = make_sl2();
  g.set_bracket({0, 1}, {rat(1), rat(0), rat(0)});  // [e,f] = e
  auto violations = g.check_filippov();
  REQUIRE_FALSE(violations.empty());
  // the (h; e,f) instance breaks: [h,[e,f]] = [h,e] = 2e but
  // [[h,e],f] + [e,[h,f]] = 2[e,f] - 2[e,f] = 0
  bool found = false;
  for (const auto& v : violations)
    if (v.x_tuple == Tuple{2} && v.y_tuple == Tuple{0, 1}) found = true;
  CHECK(found);
}

TEST_CASE("ad on the abelian algebra is zero") {
  NLieAlgebra g = make_abelian(3, 4);
  CHECK(g.ad(random_vecs(2, 4)).is_zero());
}

TEST_CASE("ad(h) on sl2 is the diagonal action") {
  Matrix m = make_sl2().ad_basis({2});
  Matrix expect(3, 3);
  expect.at(0, 0) = 2;
  expect.at(1, 1) = -2;
  CHECK(m == expect);
}

TEST_CASE("ad(e1,e2) on the simple 3-Lie algebra rotates e3,e4") {
  Matrix m = make_simple_nlie(3).ad_basis({0, 1});
  Matrix expect(4, 4);
  expect.at(3, 2) = 1;   // e3 -> e4
  expect.at(2, 3) = -1;  // e4 -> -e3
  CHECK(m == expect);
}

TEST_CASE("is_derivation basics") {
  NLieAlgebra sl2 = make_sl2();
  CHECK(sl2.is_derivation(Matrix(3, 3)));
  CHECK(make_abelian(2, 3).is_derivation(nlie::testing::random_matrix(3, 3)));
  CHECK(sl2.is_derivation(sl2.ad_basis({2})));
  Matrix not_a_derivation = Matrix::identity(3);
  CHECK_FALSE(sl2.is_derivation(not_a_derivation));
}

TEST_CASE("inner maps are derivations on random arguments") {
  for (const char* name : {"sl2", "heisenberg3", "simple:3"}) {
    NLieAlgebra g = builtin(name);
    for (int trial = 0; trial < 20; ++trial)
      CHECK(g.is_derivation(g.ad(random_vecs(g.arity() - 1, g.dim()))));
  }
}

TEST_CASE("derivation algebra dimensions") {
  CHECK(make_abelian(3, 3).derivations().dim() == 9);
  CHECK(make_sl2().derivations().dim() == 3);
  // Der(h3): D(z) determined by trace of the (x,y) block, no other
  // constraints -> dimension 6
  NLieAlgebra h3 = make_heisenberg3();
  Subspace der = h3.derivations();
  CHECK(der.dim() == 6);
  CHECK(der.contains(h3.ad_basis({0}).flatten()));
  CHECK(der.contains(h3.ad_basis({1}).flatten()));
}

TEST_CASE("derivations are derivations and closed under commutator") {
  for (const char* name : {"sl2", "heisenberg3", "simple:3"}) {
    NLieAlgebra g = builtin(name);
    Subspace der = g.derivations();
    std::size_t d = g.dim();
    for (std::size_t i = 0; i < der.dim(); ++i)
      CHECK(g.is_derivation(Matrix::unflatten(der.basis_row(i), d, d)));
    for (int trial = 0; trial < 5; ++trial) {
      Vec c1(der.dim()), c2(der.dim());
      Vec f1(d * d, Rat(0)), f2(d * d, Rat(0));
      for (std::size_t i = 0; i < der.dim(); ++i) {
        f1 = vec_add(f1, vec_scaled(der.basis_row(i), nlie::testing::random_rat()));
        f2 = vec_add(f2, vec_scaled(der.basis_row(i), nlie::testing::random_rat()));
      }
      Matrix d1 = Matrix::unflatten(f1, d, d);
      Matrix d2 = Matrix::unflatten(f2, d, d);
      CHECK(der.contains(commutator(d1, d2).flatten()));
    }
  }
}

TEST_CASE("invariants") {
  CHECK(make_abelian(3, 4).invariants().dim() == 4);
  CHECK(make_sl2().invariants().dim() == 0);
  Subspace inv = make_heisenberg3().invariants();
  CHECK(inv.dim() == 1);
  CHECK(inv.contains(unit_vec(3, 2)));
}

TEST_CASE("invariants agree with the bracket scan") {
  for (const char* name : {"sl2", "heisenberg3", "simple:3"}) {
    NLieAlgebra g = builtin(name);
    Subspace inv = g.invariants();
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = random_vec(g.dim());
      bool all_zero = true;
      for (const Tuple& t : increasing_tuples(g.dim(), g.arity() - 1)) {
        std::vector<Vec> args{x};
        for (std::size_t i : t) args.push_back(unit_vec(g.dim(), i));
        if (!vec_is_zero(g.bracket(args))) all_zero = false;
      }
      CHECK(inv.contains(x) == all_zero);
    }
  }
}

TEST_CASE("stability") {
  NLieAlgebra h3 = make_heisenberg3();
  CHECK(h3.is_stable(Subspace(3)));
  CHECK(h3.is_stable(Subspace::full(3)));
  CHECK(h3.is_stable(Subspace::span({unit_vec(3, 2)}, 3)));
  CHECK_FALSE(h3.is_stable(Subspace::span({unit_vec(3, 0)}, 3)));
}

TEST_CASE("morphism checks") {
  NLieAlgebra g = make_sl2();
  CHECK(is_nlie_morphism(g, g, Matrix::identity(3)));
  CHECK(is_nlie_morphism(g, g, Matrix(3, 3)));
  Matrix rescale(3, 3);
  rescale.at(0, 0) = 2;
  rescale.at(1, 1) = rat(1, 2);
  rescale.at(2, 2) = 1;
  CHECK(is_nlie_morphism(g, g, rescale));
  Matrix bad = Matrix::identity(3);
  bad.at(0, 0) = 3;
  CHECK_FALSE(is_nlie_morphism(g, g, bad));
  CHECK_THROWS_AS(is_nlie_morphism(g, make_simple_nlie(3), Matrix::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("builtin parsing") {
  CHECK(builtin("abelian:3,5").dim() == 5);
  CHECK(builtin("abelian:3,5").arity() == 3);
  CHECK(builtin("simple:4").dim() == 5);
  CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
  CHECK_THROWS_AS(builtin("abelian:1,5"), std::invalid_argument);
  CHECK_THROWS_AS(builtin("abelian:x"), std::invalid_argument);
}

TEST_CASE("degenerate shapes are legal") {
  // n > d: all brackets vanish
  NLieAlgebra g(4, 2);
  CHECK(g.check_filippov().empty());
  CHECK(g.invariants().dim() == 2);
  // d = 0
  NLieAlgebra zero(2, 0);
  CHECK(zero.check_filippov().empty());
  CHECK(zero.bracket({Vec{}, Vec{}}).empty());
}

TEST_CASE("change of basis preserves validity and invariant dimensions") {
  for (int trial = 0; trial < 5; ++trial) {
    NLieAlgebra g = builtin("simple:3");
    NLieAlgebra h = change_basis(g, nlie::testing::random_invertible(4));
    CHECK(h.check_filippov().empty());
    CHECK(h.invariants().dim() == g.invariants().dim());
  }
}
