#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/rational.hpp"

namespace liecoh {

/// Alternating k-form on the dual space, coefficients on the strictly
/// increasing basis monomials omega_{i_1} ^ ... ^ omega_{i_k}.
class KForm {
public:
  KForm() = default;
  KForm(int degree, int ambient_dim);

  /// omega_i.
  static KForm basis_dual(int ambient_dim, int i);

  int degree() const { return degree_; }
  int ambient() const { return ambient_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::vector<int>, Rational>& coeffs() const { return coeffs_; }

  void add(std::vector<int> idx, const Rational& c);
  /// Evaluation coefficient on an arbitrary index order (permutation sign).
  Rational coeff(std::vector<int> idx) const;

  KForm operator-() const;
  friend bool operator==(const KForm& a, const KForm& b) = default;

private:
  int degree_ = 0;
  int ambient_ = 0;
  std::map<std::vector<int>, Rational> coeffs_;
};

/// Alternating wedge with shuffle signs. Degrees beyond the ambient dimension
/// collapse to the zero top-degree form rather than erroring, so powers
/// (d omega)^p can be formed in a plain loop.
KForm wedge(const KForm& a, const KForm& b);

/// Sign convention for the dual differential used by the predicates below.
enum class DiffSign {
  negative, ///< d omega (X, Y) = -omega([X, Y])  (the default)
  positive, ///< d omega (X, Y) = +omega([X, Y])
};

/// d omega for a 1-form, with d omega (X_i, X_j) = -omega([X_i, X_j]).
KForm differential_1form(const LieAlgebra& g, const KForm& omega,
                         DiffSign sign = DiffSign::negative);

/// For dim g = 2n+1: omega ^ (d omega)^n != 0. The result does not depend on
/// the sign convention; the parameter exists so tests can assert that.
bool is_contact_form(const LieAlgebra& g, const KForm& omega,
                     DiffSign sign = DiffSign::negative);

/// For dim g = 2p: searches for a 1-form omega with (d omega)^p != 0.
/// Tries the canonical duals omega_1..omega_n first, then `trials` seeded
/// random integer forms (coefficients in -10..10). Absence is only evidence:
/// one success proves the property, failure does not refute it.
std::optional<KForm> frobenius_witness(const LieAlgebra& g, std::uint64_t seed, int trials,
                                       DiffSign sign = DiffSign::negative);

/// Odd-dimensional analogue: searches for a contact form the same way.
std::optional<KForm> contact_witness(const LieAlgebra& g, std::uint64_t seed, int trials,
                                     DiffSign sign = DiffSign::negative);

} // namespace liecoh
