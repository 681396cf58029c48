#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "primel/poly.hpp"
#include "primel/rational.hpp"

namespace primel {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws InputError if entries.size() != rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> values);
  /// Integer literal rows; all rows must have the same length.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  /// Row-major entries, i.e. the vectorization used for span computations.
  const std::vector<Rational>& entries() const { return entries_; }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Rational& c, const Matrix& m);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return mat_sub(a, b); }

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Matrix& m);

/// One exact solution of a * v = b, free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const Matrix& a, std::span<const Rational> b);

/// nullopt for singular input.
std::optional<Matrix> inverse(const Matrix& m);

/// p(M) by Horner's rule.
Matrix evaluate(const Poly& p, const Matrix& m);

/// Monic least-degree p with p(M) = 0, from the first linear dependence
/// among vec(I), vec(M), vec(M^2), ...
Poly min_poly_matrix(const Matrix& m);

/// True iff the minimal polynomial is separable.
bool is_diagonalizable(const Matrix& m);

}  // namespace primel
