#pragma once

#include <cstddef>
#include <vector>

#include "liecoh/matrix.hpp"

namespace liecoh {

/// Linear subspace of Q^n, canonically represented by its reduced
/// row-echelon basis (one basis vector per row). Two subspaces are equal
/// iff their basis matrices are identical.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Row space of the given vectors (not required to be independent).
  static Subspace from_spanning(std::size_t ambient, std::vector<std::vector<Rational>> rows);
  static Subspace from_spanning(const Matrix& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// RREF basis matrix, dim() rows by ambient_dim() columns.
  const Matrix& basis() const { return basis_; }
  std::vector<Rational> basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  std::size_t ambient_ = 0;
  Matrix basis_; // RREF, no zero rows
};

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

/// Basis of { v : m · v = 0 } as a canonical (RREF) subspace of Q^cols.
Subspace kernel_basis(const Matrix& m);

} // namespace liecoh
