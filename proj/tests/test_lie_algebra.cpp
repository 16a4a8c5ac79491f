#include "doctest.h"

#include "liecoh/cochain.hpp"
#include "liecoh/errors.hpp"
#include "liecoh/family.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/rng.hpp"

using namespace liecoh;

namespace {

LieAlgebra abelian(int n) { return LieAlgebra::raw(n, {}); }

LieAlgebra heisenberg(int n) {
  // 2n+1 dimensional: [X_{2k+1}, X_{2k+2}] = X_{2n+1}
  MaurerCartan mc;
  mc.dim = 2 * n + 1;
  for (int k = 0; k < n; ++k) mc.d[2 * n + 1][{2 * k + 1, 2 * k + 2}] = 1;
  return from_maurer_cartan(mc);
}

FamilyParams p23() { return FamilyParams(2, {Rational(3)}); }
FamilyParams p327() { return FamilyParams(3, {Rational(2), Rational(7)}); }

} // namespace

TEST_CASE("maurer-cartan data of the model at p=2 gives the expected brackets") {
  MaurerCartan mc;
  mc.dim = 4;
  mc.d[1][{1, 2}] = 1;
  mc.d[1][{3, 4}] = 1;
  mc.d[3][{2, 3}] = 3;
  mc.d[4][{2, 4}] = -4;
  const LieAlgebra g = from_maurer_cartan(mc);
  CHECK(g.bracket(1, 2) == SparseVec{{1, Rational(1)}});
  CHECK(g.bracket(3, 4) == SparseVec{{1, Rational(1)}});
  CHECK(g.bracket(2, 3) == SparseVec{{3, Rational(3)}});
  CHECK(g.bracket(2, 4) == SparseVec{{4, Rational(-4)}});
  CHECK(g.bracket(1, 3).empty());
  CHECK(g.same_structure(build_F(p23())));
}

TEST_CASE("maurer-cartan: all-zero equations give the abelian algebra") {
  MaurerCartan mc;
  mc.dim = 3;
  const LieAlgebra g = from_maurer_cartan(mc);
  CHECK(g.brackets().empty());
}

TEST_CASE("maurer-cartan: heisenberg from one structure equation") {
  const LieAlgebra h1 = heisenberg(1);
  CHECK(h1.dim() == 3);
  CHECK(h1.bracket(1, 2) == SparseVec{{3, Rational(1)}});
  CHECK(h1.bracket(1, 3).empty());
  CHECK(h1.bracket(2, 3).empty());
}

TEST_CASE("antisymmetry of the bracket accessor") {
  const LieAlgebra g = build_F(p23());
  CHECK(g.bracket(2, 1) == SparseVec{{1, Rational(-1)}});
  CHECK(g.bracket(2, 2).empty());
}

TEST_CASE("jacobi_check: model algebras and abelian pass, a broken table fails") {
  CHECK(jacobi_check(build_F(p327())).empty());
  CHECK(jacobi_check(abelian(5)).empty());

  // so(3)-like table with one deliberately corrupted bracket
  BracketMap br;
  br[{1, 2}][3] = 1;
  br[{1, 2}][1] = 1; // the bad extra term
  br[{1, 3}][2] = 1;
  const LieAlgebra broken = LieAlgebra::raw(3, br);
  const auto violations = jacobi_check(broken);
  REQUIRE(!violations.empty());
  CHECK(violations.front().i == 1);
  CHECK(violations.front().j == 2);
  CHECK(violations.front().k == 3);
  // the defect is exactly X_2 (hand expansion of the cyclic sum)
  CHECK(violations.front().defect == SparseVec{{2, Rational(1)}});
  CHECK_THROWS_AS(LieAlgebra::checked(3, br), structural_error);
}

TEST_CASE("center: model algebras are centerless, heisenberg has a line") {
  CHECK(center(build_F(p327())).dim() == 0);
  CHECK(center(build_F(FamilyParams(2, {Rational(0)}))).dim() == 0);
  CHECK(center(abelian(4)).dim() == 4);
  const Subspace z = center(heisenberg(1));
  CHECK(z.dim() == 1);
  CHECK(z.contains({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("derived subalgebra of the p=2 model is span{X1, X3, X4}") {
  const Subspace d = derived_subalgebra(build_F(p23()));
  CHECK(d.dim() == 3);
  CHECK(d.contains({Rational(1), Rational(0), Rational(0), Rational(0)}));
  CHECK(d.contains({Rational(0), Rational(0), Rational(1), Rational(0)}));
  CHECK(d.contains({Rational(0), Rational(0), Rational(0), Rational(1)}));
  CHECK(!d.contains({Rational(0), Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("derived series and solvability") {
  const LieAlgebra f = build_F(p327());
  const auto series = derived_series(f);
  REQUIRE(series.size() == 4);
  CHECK(series[0].dim() == 6);
  CHECK(series[1].dim() == 5);
  CHECK(series[2].dim() == 1);
  CHECK(series[3].dim() == 0);
  CHECK(solvable_steps(f) == 3);
  CHECK(solvable_steps(abelian(3)) == 1);
  CHECK(solvable_steps(abelian(0)) == 0);

  // a simple-type table is not solvable
  BracketMap so3;
  so3[{1, 2}][3] = 1;
  so3[{2, 3}][1] = 1;
  so3[{1, 3}][2] = -1;
  CHECK(!solvable_steps(LieAlgebra::checked(3, so3)).has_value());
}

TEST_CASE("derivation dimensions: 3p-1 on generic members, n^2 on abelian") {
  CHECK(derivations(build_F(p23())).dim() == 5);
  CHECK(derivations(build_F(p327())).dim() == 8);
  CHECK(derivations(abelian(3)).dim() == 9);
}

TEST_CASE("every ad(x) is a derivation") {
  const LieAlgebra f = build_F(p327());
  const Subspace der = derivations(f);
  const int n = f.dim();
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
      for (const auto& [m, c] : f.bracket(i, j))
        v[static_cast<std::size_t>(j - 1) * n + (m - 1)] = c;
    CHECK(der.contains(v));
  }
  CHECK(der.dim() >= static_cast<std::size_t>(n) - center(f).dim());
}

TEST_CASE("identity basis change leaves the algebra unchanged") {
  const LieAlgebra f = build_F(p23());
  const BasisChange id(Matrix::identity(4));
  CHECK(apply_basis_change(f, id).same_structure(f));
  CHECK(is_isomorphism_witness(f, f, id));
}

TEST_CASE("singular basis change is rejected") {
  Matrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 0) = 1;
  CHECK_THROWS_AS(BasisChange{m}, input_error);
}

TEST_CASE("scaling X1 alone is not an automorphism of the p=2 model") {
  const LieAlgebra f = build_F(p23());
  Matrix m = Matrix::identity(4);
  m.at(0, 0) = 2;
  const BasisChange p(m);
  CHECK(!is_isomorphism_witness(f, f, p));
  // the transported [X3, X4] picks up the factor 1/2 on X1
  const LieAlgebra moved = apply_basis_change(f, p);
  CHECK(moved.bracket(3, 4) == SparseVec{{1, Rational(1, 2)}});
}

TEST_CASE("basis changes preserve the isomorphism invariants") {
  const LieAlgebra f = build_F(p23());
  DetRng rng(19);
  int tested = 0;
  while (tested < 5) {
    Matrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = Rational(rng.next_in(-3, 3));
    if (rref(m).rank < 4) continue;
    ++tested;
    const BasisChange p(m);
    const LieAlgebra moved = apply_basis_change(f, p);
    CHECK(jacobi_check(moved).empty());
    CHECK(center(moved).dim() == center(f).dim());
    CHECK(derived_subalgebra(moved).dim() == derived_subalgebra(f).dim());
    CHECK(derivations(moved).dim() == derivations(f).dim());
    CHECK(solvable_steps(moved) == solvable_steps(f));
  }
}

TEST_CASE("contraction conditions") {
  const LieAlgebra f2 = build_F(p23());
  const LieAlgebra f3 = build_F(p327());

  SUBCASE("reflexive case fails strictness of the derivation condition") {
    const ContractionReport r = contraction_conditions(f3, f3);
    CHECK(!r.der_ok);
    CHECK(r.derived_ok);
    CHECK(r.center_ok);
  }
  SUBCASE("model against the abelian algebra of the same dimension") {
    const ContractionReport r = contraction_conditions(f2, abelian(4));
    CHECK(r.der_ok);      // 5 < 16
    CHECK(r.derived_ok);  // 3 >= 0
    CHECK(r.center_ok);   // 0 <= 4
    CHECK(r.der_g == 5);
    CHECK(r.der_h == 16);
  }
  SUBCASE("abelian cannot contract onto the model: center shrinks") {
    const ContractionReport r = contraction_conditions(abelian(4), f2);
    CHECK(!r.center_ok); // 4 > 0
  }
  SUBCASE("dimension mismatch is an input error") {
    CHECK_THROWS_AS(contraction_conditions(f2, f3), input_error);
  }
}

TEST_CASE("maurer-cartan input with a non-jacobi table names the violating triples") {
  MaurerCartan mc;
  mc.dim = 4;
  mc.d[1][{1, 2}] = 1;
  mc.d[2][{1, 3}] = 1;
  mc.d[3][{1, 4}] = 1; // d(w3) = w1 ^ w4 makes the table fail
  mc.d[1][{3, 4}] = 1;
  CHECK_THROWS_AS(from_maurer_cartan(mc), structural_error);
}

TEST_CASE("dimension-zero algebras are legal and every invariant is empty") {
  const LieAlgebra g = abelian(0);
  CHECK(jacobi_check(g).empty());
  CHECK(center(g).dim() == 0);
  CHECK(derived_subalgebra(g).dim() == 0);
  CHECK(derivations(g).dim() == 0);
  CHECK(solvable_steps(g) == 0);
}
