#pragma once

#include <map>
#include <utility>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"

namespace liecoh {

/// Alternating q-linear map g^q -> g with adjoint coefficients, stored as
/// coefficients on the canonical basis: (strictly increasing argument tuple,
/// 1-based target index) -> coefficient. Degree-0 cochains are elements,
/// degree-1 cochains are endomorphisms.
class Cochain {
public:
  using Key = std::pair<std::vector<int>, int>;

  Cochain() = default;
  Cochain(int degree, int dim);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Key, Rational>& coeffs() const { return coeffs_; }

  /// Accumulates c on the (sorted) tuple; picks up the permutation sign,
  /// drops repeated-index tuples, prunes zeros.
  void add(std::vector<int> args, int target, const Rational& c);
  /// Signed coefficient for an arbitrary argument order.
  Rational coeff(std::vector<int> args, int target) const;
  /// Full value on basis arguments, as a sparse algebra element.
  SparseVec value(const std::vector<int>& args) const;

  Cochain& operator+=(const Cochain& o);
  Cochain& scale(const Rational& s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator*(const Rational& s, Cochain a) { return a.scale(s); }
  friend bool operator==(const Cochain& a, const Cochain& b) = default;

private:
  int degree_ = 0;
  int dim_ = 0;
  std::map<Key, Rational> coeffs_;
};

/// The Chevalley-Eilenberg coboundary with adjoint coefficients:
///   (df)(x_0..x_q) = sum_i (-1)^i [x_i, f(..x^_i..)]
///                  + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..x^_i..x^_j..).
/// Total in the degree: for q >= dim the result is the zero cochain.
Cochain ce_differential(const LieAlgebra& g, const Cochain& f);

/// dim C^q(g, g) = binom(n, q) * n.
std::size_t cochain_space_dim(int n, int q);
/// The canonical basis of C^q in lexicographic (tuple, target) order.
std::vector<Cochain::Key> cochain_basis(int n, int q);
/// Coordinates of f in the canonical basis order.
std::vector<Rational> cochain_to_dense(const Cochain& f);
Cochain cochain_from_dense(int degree, int n, const std::vector<Rational>& coords);

/// Matrix of the degree-q coboundary: rows = C^{q+1} basis, cols = C^q basis.
Matrix ce_matrix(const LieAlgebra& g, int q);

/// ad(x) as a degree-1 cochain: y -> [x, y].
Cochain ad_cochain(const LieAlgebra& g, int i);
/// The law itself as a 2-cochain: (x, y) -> [x, y].
Cochain bracket_cochain(const LieAlgebra& g);

} // namespace liecoh
