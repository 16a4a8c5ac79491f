#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::vector<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  Matrix transposed() const;

  /// m · v. Throws input_error on dimension mismatch.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix matrix;                   ///< same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots; ///< pivot column of row r, strictly increasing
};

/// Reduced row-echelon form over the rationals (Gauss–Jordan, exact).
/// The result is the unique RREF of the input.
RrefResult rref(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing denominators row-wise. Independent of rref(); the two paths are
/// compared as a standing oracle in the test suites.
std::size_t rank_fraction_free(const Matrix& m);

/// Any particular solution of m·x = b, or nullopt when inconsistent.
/// Free variables of the RREF are set to zero, so the result is canonical.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

} // namespace liecoh
