#include "liecoh/subspace.hpp"

#include "liecoh/errors.hpp"

namespace liecoh {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::from_spanning(std::size_t ambient, std::vector<std::vector<Rational>> rows) {
  return from_spanning(Matrix::from_rows(ambient, std::move(rows)));
}

Subspace Subspace::from_spanning(const Matrix& rows) {
  const RrefResult rr = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = Matrix(rr.rank, rows.cols());
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < rows.cols(); ++c) s.basis_.at(r, c) = rr.matrix.at(r, c);
  return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw input_error("subspace: vector dimension mismatch");
  std::vector<Rational> w = v;
  // reduce against the RREF basis; membership iff the residue vanishes
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t piv = ambient_;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!basis_.at(r, c).is_zero()) { piv = c; break; }
    if (piv == ambient_ || w[piv].is_zero()) continue;
    const Rational f = w[piv];
    for (std::size_t c = piv; c < ambient_; ++c) {
      if (basis_.at(r, c).is_zero()) continue;
      w[c] -= f * basis_.at(r, c);
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw input_error("subspace: ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw input_error("subspace: ambient dimension mismatch in sum");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(s.dim() + t.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis_vector(r));
  for (std::size_t r = 0; r < t.dim(); ++r) rows.push_back(t.basis_vector(r));
  return Subspace::from_spanning(s.ambient_dim(), std::move(rows));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw input_error("subspace: ambient dimension mismatch in intersect");
  const std::size_t n = s.ambient_dim();
  // Zassenhaus: row-reduce [S | S; T | 0]. Rows whose left half vanished
  // carry the intersection in their right half.
  Matrix z(s.dim() + t.dim(), 2 * n);
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      z.at(r, c) = s.basis().at(r, c);
      z.at(r, n + c) = s.basis().at(r, c);
    }
  for (std::size_t r = 0; r < t.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) z.at(s.dim() + r, c) = t.basis().at(r, c);
  const RrefResult rr = rref(z);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < rr.rank; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c)
      if (!rr.matrix.at(r, c).is_zero()) left_zero = false;
    if (!left_zero) continue;
    std::vector<Rational> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = rr.matrix.at(r, n + c);
    rows.push_back(std::move(v));
  }
  return Subspace::from_spanning(n, std::move(rows));
}

Subspace kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.matrix.at(r, f);
    rows.push_back(std::move(v));
  }
  return Subspace::from_spanning(n, std::move(rows));
}

} // namespace liecoh
