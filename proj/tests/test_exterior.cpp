#include "doctest.h"

#include "liecoh/errors.hpp"
#include "liecoh/exterior.hpp"
#include "liecoh/family.hpp"
#include "liecoh/rng.hpp"

using namespace liecoh;

namespace {

LieAlgebra heisenberg(int n) {
  MaurerCartan mc;
  mc.dim = 2 * n + 1;
  for (int k = 0; k < n; ++k) mc.d[2 * n + 1][{2 * k + 1, 2 * k + 2}] = 1;
  return from_maurer_cartan(mc);
}

KForm two_form(int n, std::initializer_list<std::pair<std::pair<int, int>, long>> terms) {
  KForm f(2, n);
  for (const auto& [ij, c] : terms) f.add({ij.first, ij.second}, Rational(c));
  return f;
}

} // namespace

TEST_CASE("wedge of a form with itself vanishes in odd degree") {
  const KForm w1 = KForm::basis_dual(4, 1);
  CHECK(wedge(w1, w1).is_zero());
}

TEST_CASE("wedge of basis monomials gives the top form") {
  const int n = 4;
  const KForm w12 = two_form(n, {{{1, 2}, 1}});
  const KForm w34 = two_form(n, {{{3, 4}, 1}});
  const KForm top = wedge(w12, w34);
  CHECK(top.degree() == 4);
  CHECK(top.coeff({1, 2, 3, 4}) == Rational(1));
}

TEST_CASE("wedge is graded-commutative") {
  DetRng rng(71);
  const int n = 5;
  for (int i = 0; i < 20; ++i) {
    KForm a(1, n), b(2, n);
    for (int j = 1; j <= n; ++j) a.add({j}, Rational(rng.next_in(-4, 4)));
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) b.add({j, k}, Rational(rng.next_in(-4, 4)));
    CHECK(wedge(a, b) == wedge(b, a)); // (-1)^{1*2} = +1
    KForm c(1, n);
    for (int j = 1; j <= n; ++j) c.add({j}, Rational(rng.next_in(-4, 4)));
    KForm ac = wedge(a, c);
    KForm ca = wedge(c, a);
    CHECK(ac == -ca); // (-1)^{1*1} = -1
  }
}

TEST_CASE("degree overflow in wedge returns the zero top form, not an error") {
  const int n = 3;
  const KForm w12 = two_form(n, {{{1, 2}, 1}});
  const KForm over = wedge(w12, w12);
  CHECK(over.is_zero());
  CHECK(over.degree() == n);
}

TEST_CASE("dual differential of the model keeps the first structure equation") {
  const LieAlgebra f = build_F(FamilyParams(2, {Rational(3)}));
  const KForm d1 = differential_1form(f, KForm::basis_dual(4, 1));
  // d w1 = -(w1^w2 + w3^w4) under the negative sign convention
  CHECK(d1.coeff({1, 2}) == Rational(-1));
  CHECK(d1.coeff({3, 4}) == Rational(-1));
  CHECK(d1.coeffs().size() == 2);
  const KForm d1pos = differential_1form(f, KForm::basis_dual(4, 1), DiffSign::positive);
  CHECK(d1pos == -d1);
}

TEST_CASE("abelian algebras kill every differential") {
  const LieAlgebra a4 = LieAlgebra::raw(4, {});
  DetRng rng(5);
  for (int i = 0; i < 10; ++i) {
    KForm w(1, 4);
    for (int j = 1; j <= 4; ++j) w.add({j}, Rational(rng.next_in(-9, 9)));
    CHECK(differential_1form(a4, w).is_zero());
  }
}

TEST_CASE("heisenberg differential of the contact dual") {
  const LieAlgebra h1 = heisenberg(1);
  const KForm d3 = differential_1form(h1, KForm::basis_dual(3, 3));
  CHECK(d3.coeff({1, 2}) == Rational(-1));
  CHECK(d3.coeffs().size() == 1);
}

TEST_CASE("contact forms on the heisenberg algebras") {
  for (int n : {1, 2, 3, 4}) {
    const LieAlgebra h = heisenberg(n);
    CHECK(is_contact_form(h, KForm::basis_dual(2 * n + 1, 2 * n + 1)));
    CHECK(!is_contact_form(h, KForm::basis_dual(2 * n + 1, 1))); // d w1 = 0
    // sign-convention independence
    CHECK(is_contact_form(h, KForm::basis_dual(2 * n + 1, 2 * n + 1), DiffSign::positive));
  }
  CHECK_THROWS_AS(is_contact_form(LieAlgebra::raw(4, {}), KForm::basis_dual(4, 1)), input_error);
}

TEST_CASE("square of the model's first dual differential is twice the top form") {
  const LieAlgebra f = build_F(FamilyParams(2, {Rational(3)}));
  const KForm d1 = differential_1form(f, KForm::basis_dual(4, 1));
  const KForm sq = wedge(d1, d1);
  CHECK(sq.coeff({1, 2, 3, 4}) == Rational(2));
  CHECK(sq.coeffs().size() == 1);
}

TEST_CASE("frobenius witness: the first canonical dual works for the model") {
  for (const auto& params : {FamilyParams(2, {Rational(3)}),
                             FamilyParams(3, {Rational(2), Rational(7)}),
                             FamilyParams(4, {Rational(2), Rational(7), Rational(31)})}) {
    const LieAlgebra f = build_F(params);
    const auto w = frobenius_witness(f, 0, 5);
    REQUIRE(w.has_value());
    CHECK(*w == KForm::basis_dual(2 * params.p, 1));
    // (d w1)^p = +-p! * top form
    KForm d = differential_1form(f, *w);
    KForm acc = d;
    for (int i = 1; i < params.p; ++i) acc = wedge(acc, d);
    Rational fact(1);
    for (int i = 2; i <= params.p; ++i) fact *= Rational(i);
    std::vector<int> top;
    for (int i = 1; i <= 2 * params.p; ++i) top.push_back(i);
    CHECK(acc.coeff(top).abs() == fact);
    CHECK(acc.coeffs().size() == 1);
    // invariance under the sign flip
    CHECK(frobenius_witness(f, 0, 5, DiffSign::positive) == w);
  }
}

TEST_CASE("frobenius witness: absence on the abelian algebra") {
  const LieAlgebra a4 = LieAlgebra::raw(4, {});
  CHECK(!frobenius_witness(a4, 7, 25).has_value());
}

TEST_CASE("frobenius witness: absence on heisenberg plus a line") {
  // 4-dimensional: [X1, X2] = X3 and a central X4; every d omega is a
  // multiple of w1^w2, so its square always vanishes
  BracketMap br;
  br[{1, 2}][3] = 1;
  const LieAlgebra g = LieAlgebra::checked(4, br);
  DetRng rng(101);
  for (int i = 0; i < 30; ++i) {
    KForm w(1, 4);
    for (int j = 1; j <= 4; ++j) w.add({j}, Rational(rng.next_in(-10, 10)));
    const KForm d = differential_1form(g, w);
    for (const auto& [idx, c] : d.coeffs()) CHECK(idx == std::vector<int>{1, 2});
  }
  CHECK(!frobenius_witness(g, 7, 40).has_value());
  CHECK(!frobenius_witness(g, 7, 40, DiffSign::positive).has_value());
}

TEST_CASE("witness searches are deterministic in the seed") {
  const LieAlgebra a4 = LieAlgebra::raw(4, {});
  CHECK(frobenius_witness(a4, 123, 10) == frobenius_witness(a4, 123, 10));
  const LieAlgebra h1 = heisenberg(1);
  const auto c1 = contact_witness(h1, 9, 10);
  const auto c2 = contact_witness(h1, 9, 10);
  REQUIRE(c1.has_value());
  CHECK(c1 == c2);
  CHECK(*c1 == KForm::basis_dual(3, 3));
}

TEST_CASE("parity preconditions") {
  const LieAlgebra a4 = LieAlgebra::raw(4, {});
  const LieAlgebra a3 = LieAlgebra::raw(3, {});
  CHECK_THROWS_AS(frobenius_witness(a3, 0, 1), input_error);
  CHECK_THROWS_AS(contact_witness(a4, 0, 1), input_error);
}
