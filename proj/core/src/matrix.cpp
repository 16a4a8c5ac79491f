#include "liecoh/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "liecoh/errors.hpp"

namespace liecoh {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw input_error("matrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<std::vector<Rational>> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw input_error("matrix: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = std::move(rows[r][c]);
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_),
          data_.begin() + static_cast<long>((r + 1) * cols_)};
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw input_error("matrix: apply dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero() || v[c].is_zero()) continue;
      acc += at(r, c) * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

namespace {

// Incremental Gauss–Jordan: rows are folded into a fully reduced pivot set one
// at a time, so the work is bounded by rank, not by the row count. The pivot
// set is kept in Jordan form throughout, which makes the final row list the
// unique RREF of the input's row space.
struct PivotSet {
  std::vector<std::vector<Rational>> rows; // fully reduced, sorted by pivot col
  std::vector<std::size_t> pivots;

  // Reduces v in place against the current pivot rows.
  void reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational f = v[pivots[r]];
      if (f.is_zero()) continue;
      const auto& pr = rows[r];
      for (std::size_t c = pivots[r]; c < v.size(); ++c) {
        if (pr[c].is_zero()) continue;
        v[c] -= f * pr[c];
      }
    }
  }

  // Returns false if v reduced to zero, true if it became a new pivot row.
  bool insert(std::vector<Rational> v) {
    reduce(v);
    std::size_t lead = v.size();
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) { lead = c; break; }
    if (lead == v.size()) return false;
    const Rational pv = v[lead];
    if (!pv.is_one())
      for (std::size_t c = lead; c < v.size(); ++c)
        if (!v[c].is_zero()) v[c] /= pv;
    // eliminate the new pivot column from the existing rows
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational f = rows[r][lead];
      if (f.is_zero()) continue;
      auto& pr = rows[r];
      for (std::size_t c = lead; c < v.size(); ++c) {
        if (v[c].is_zero()) continue;
        pr[c] -= f * v[c];
      }
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots.begin(), pivots.end(), lead) - pivots.begin());
    pivots.insert(pivots.begin() + static_cast<long>(pos), lead);
    rows.insert(rows.begin() + static_cast<long>(pos), std::move(v));
    return true;
  }
};

} // namespace

RrefResult rref(const Matrix& m) {
  PivotSet ps;
  for (std::size_t r = 0; r < m.rows(); ++r) ps.insert(m.row(r));
  RrefResult out;
  out.rank = ps.rows.size();
  out.pivots = ps.pivots;
  out.matrix = Matrix(m.rows(), m.cols());
  for (std::size_t r = 0; r < ps.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.matrix.at(r, c) = std::move(ps.rows[r][c]);
  return out;
}

std::size_t rank_fraction_free(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row; scaling a row leaves the rank unchanged.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).raw().get_den().get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m.at(r, c).raw();
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  // One-step Bareiss: every entry after step k is a (k+1)x(k+1) minor of the
  // scaled matrix, so the division by the previous pivot is exact. The
  // division is checked, not assumed.
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) { pr = i; break; }
    if (pr == rows) continue;
    if (pr != r) std::swap(a[pr], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = piv * a[i][j] - a[i][c] * a[r][j];
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (sgn(rem) != 0)
          throw std::logic_error("bareiss: inexact division (elimination invariant broken)");
        a[i][j] = q;
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw input_error("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  const RrefResult rr = rref(aug);
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] == m.cols()) return std::nullopt; // pivot in the b column
    x[rr.pivots[r]] = rr.matrix.at(r, m.cols());
  }
  return x;
}

} // namespace liecoh
