#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlie/lie_algebra.hpp"
#include "support/generators.hpp"

using namespace nlie;
using nlie::testing::random_vec;

namespace {

LieAlgebra lie_sl2() {
  LieAlgebra g(3);  // basis e, f, h
  g.set_bracket(0, 1, unit_vec(3, 2));                    // [e,f] = h
  g.set_bracket(0, 2, vec_scaled(unit_vec(3, 0), rat(-2)));  // [e,h] = -2e
  g.set_bracket(1, 2, vec_scaled(unit_vec(3, 1), rat(2)));   // [f,h] = 2f
  REQUIRE(g.check_jacobi().empty());
  return g;
}

LieAlgebra lie_h3() {
  LieAlgebra g(3);
  g.set_bracket(0, 1, unit_vec(3, 2));  // [x,y] = z
  REQUIRE(g.check_jacobi().empty());
  return g;
}

}  // namespace

TEST_CASE("center") {
  CHECK(LieAlgebra(4).center().dim() == 4);
  CHECK(lie_sl2().center().dim() == 0);
  Subspace c = lie_h3().center();
  CHECK(c.dim() == 1);
  CHECK(c.contains(unit_vec(3, 2)));
}

TEST_CASE("series") {
  auto abelian = LieAlgebra(3).derived_series();
  CHECK(abelian.size() == 2);
  CHECK(abelian.back().dim() == 0);

  auto perfect = lie_sl2().derived_series();
  CHECK(perfect.back().dim() == 3);  // [sl2, sl2] = sl2

  auto h3d = lie_h3().derived_series();
  CHECK(h3d.size() == 3);
  CHECK(h3d[1].dim() == 1);
  CHECK(h3d.back().dim() == 0);
  auto h3l = lie_h3().lower_central_series();
  CHECK(h3l.back().dim() == 0);
  CHECK(h3l.size() == 3);
}

TEST_CASE("series terms are nested") {
  for (LieAlgebra g : {lie_sl2(), lie_h3()}) {
    auto ds = g.derived_series();
    for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i - 1].contains(ds[i]));
    auto ls = g.lower_central_series();
    for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i - 1].contains(ls[i]));
  }
}

TEST_CASE("solvable, nilpotent, abelian flags") {
  LieAlgebra ab(3);
  CHECK(ab.is_solvable());
  CHECK(ab.is_nilpotent());
  CHECK(ab.is_abelian());
  CHECK(lie_h3().is_nilpotent());
  CHECK(lie_h3().is_solvable());
  CHECK_FALSE(lie_h3().is_abelian());
  CHECK_FALSE(lie_sl2().is_solvable());
  CHECK_FALSE(lie_sl2().is_nilpotent());
}

TEST_CASE("Killing form of sl2") {
  Matrix k = lie_sl2().killing_form();
  CHECK(k.at(0, 1) == 4);
  CHECK(k.at(2, 2) == 8);
  CHECK(k.determinant() == rat(-128));
  CHECK(lie_sl2().is_semisimple());
}

TEST_CASE("degenerate Killing forms") {
  CHECK(LieAlgebra(2).killing_form().is_zero());
  CHECK_FALSE(LieAlgebra(2).is_semisimple());
  CHECK(lie_h3().killing_form().determinant() == 0);
  CHECK_FALSE(lie_h3().is_semisimple());
}

TEST_CASE("Killing form is symmetric and invariant") {
  LieAlgebra g = lie_sl2();
  Matrix k = g.killing_form();
  CHECK(k == k.transposed());
  auto form = [&](const Vec& a, const Vec& b) {
    Rat out(0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out += a[i] * k.at(i, j) * b[j];
    return out;
  };
  for (int trial = 0; trial < 10; ++trial) {
    Vec a = random_vec(3), b = random_vec(3), c = random_vec(3);
    CHECK(form(g.bracket(a, b), c) + form(b, g.bracket(a, c)) == 0);
  }
}

TEST_CASE("ideals, subalgebras, normalizers") {
  LieAlgebra g = lie_sl2();
  CHECK(g.is_ideal(Subspace(3)));
  CHECK(g.normalizer(Subspace(3)).dim() == 3);
  Subspace borel = Subspace::span({unit_vec(3, 0), unit_vec(3, 2)}, 3);
  CHECK(g.is_subalgebra(borel));
  CHECK_FALSE(g.is_ideal(borel));
  Subspace h = Subspace::span({unit_vec(3, 2)}, 3);
  CHECK(g.is_cartan(h));
  Subspace e = Subspace::span({unit_vec(3, 0)}, 3);
  CHECK_FALSE(g.is_cartan(e));  // not self-normalizing
  CHECK(g.normalizer(e).contains(h.basis_row(0)));
}

TEST_CASE("center is an ideal") {
  for (LieAlgebra g : {lie_sl2(), lie_h3(), LieAlgebra(4)})
    CHECK(g.is_ideal(g.center()));
}

TEST_CASE("restriction to a subalgebra") {
  LieAlgebra g = lie_sl2();
  Subspace borel = Subspace::span({unit_vec(3, 0), unit_vec(3, 2)}, 3);
  LieAlgebra sub = g.restricted_to(borel);
  CHECK(sub.dim() == 2);
  CHECK(sub.is_solvable());
  CHECK_FALSE(sub.is_nilpotent());
  CHECK_THROWS_AS(
      g.restricted_to(Subspace::span({unit_vec(3, 0), unit_vec(3, 1)}, 3)),
      std::invalid_argument);
}
