#include "doctest.h"

#include "liecoh/errors.hpp"
#include "liecoh/rng.hpp"
#include "liecoh/subspace.hpp"

using namespace liecoh;

namespace {

Subspace random_subspace(DetRng& rng, std::size_t ambient) {
  const std::size_t gens = static_cast<std::size_t>(rng.next_in(0, static_cast<long>(ambient)));
  std::vector<std::vector<Rational>> rows;
  for (std::size_t g = 0; g < gens; ++g) {
    std::vector<Rational> v(ambient);
    for (auto& x : v) x = Rational(rng.next_in(-5, 5));
    rows.push_back(std::move(v));
  }
  return Subspace::from_spanning(ambient, std::move(rows));
}

} // namespace

TEST_CASE("kernel of the identity is zero, kernel of zero is everything") {
  CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
  CHECK(kernel_basis(Matrix(2, 5)).dim() == 5);
  CHECK(kernel_basis(Matrix(2, 5)) == Subspace::full(5));
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
  DetRng rng(7);
  for (int i = 0; i < 25; ++i) {
    Matrix m(4, 6);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) m.at(r, c) = Rational(rng.next_in(-4, 4));
    const Subspace k = kernel_basis(m);
    CHECK(rref(m).rank + k.dim() == 6);
    const std::vector<Rational> zero(4);
    for (std::size_t v = 0; v < k.dim(); ++v) CHECK(m.apply(k.basis_vector(v)) == zero);
  }
}

TEST_CASE("kernel basis is itself in reduced row-echelon form") {
  DetRng rng(13);
  for (int i = 0; i < 20; ++i) {
    Matrix m(3, 7);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 7; ++c) m.at(r, c) = Rational(rng.next_in(-3, 3));
    const Subspace k = kernel_basis(m);
    CHECK(Subspace::from_spanning(k.basis()) == k);
  }
}

TEST_CASE("containment") {
  const Subspace full = Subspace::full(4);
  DetRng rng(29);
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> v(4);
    for (auto& x : v) x = Rational(rng.next_in(-9, 9), rng.next_in(1, 9));
    CHECK(full.contains(v));
  }
  const Subspace s = Subspace::from_spanning(3, {{Rational(1), Rational(0), Rational(1)}});
  CHECK(s.contains({Rational(2), Rational(0), Rational(2)}));
  CHECK(!s.contains({Rational(1), Rational(1), Rational(1)}));
  CHECK_THROWS_AS(s.contains(std::vector<Rational>(2)), input_error);
}

TEST_CASE("intersect is idempotent and sum is monotone") {
  DetRng rng(41);
  for (int i = 0; i < 15; ++i) {
    const Subspace s = random_subspace(rng, 5);
    CHECK(intersect(s, s) == s);
    CHECK(sum(s, s) == s);
    CHECK(sum(s, Subspace::zero(5)) == s);
    CHECK(intersect(s, Subspace::full(5)) == s);
  }
}

TEST_CASE("dimension formula dim(s+t) + dim(s^t) = dim s + dim t on random pairs") {
  DetRng rng(97);
  for (int i = 0; i < 40; ++i) {
    const Subspace s = random_subspace(rng, 6);
    const Subspace t = random_subspace(rng, 6);
    const Subspace u = sum(s, t);
    const Subspace v = intersect(s, t);
    CHECK(u.dim() + v.dim() == s.dim() + t.dim());
    CHECK(s.contains(v));
    CHECK(t.contains(v));
    CHECK(u.contains(s));
    CHECK(u.contains(t));
  }
}

TEST_CASE("equality is canonical: different spanning sets, same subspace") {
  const Subspace a = Subspace::from_spanning(
      3, {{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(1), Rational(1)}});
  const Subspace b = Subspace::from_spanning(
      3, {{Rational(1), Rational(2), Rational(1)}, {Rational(2), Rational(1), Rational(-1)}});
  CHECK(a == b);
}
