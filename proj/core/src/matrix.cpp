#include "primel/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "primel/error.hpp"
#include "primel/linear_dependence.hpp"

namespace primel {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    throw InputError(std::string(what) + ": matrix must be square, got " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError(std::string(what) + ": shape mismatch");
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix rows");
    for (long v : row) entries.emplace_back(v);
  }
  return Matrix(r, c, std::move(entries));
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& v) { return v.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("mat_mul: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  std::vector<Rational> e = a.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.entries()[k];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_sub");
  std::vector<Rational> e = a.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= b.entries()[k];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix mat_scale(const Rational& c, const Matrix& m) {
  std::vector<Rational> e = m.entries();
  for (auto& v : e) v *= c;
  return Matrix(m.rows(), m.cols(), std::move(e));
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const Rational inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::optional<std::vector<Rational>> solve_linear(const Matrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InputError("solve_linear: right-hand side has the wrong length");
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const RrefResult reduced = rref(augmented);
  if (!reduced.pivot_columns.empty() && reduced.pivot_columns.back() == a.cols()) {
    return std::nullopt;
  }
  std::vector<Rational> solution(a.cols());
  for (std::size_t k = 0; k < reduced.rank; ++k) {
    solution[reduced.pivot_columns[k]] = reduced.reduced(k, a.cols());
  }
  return solution;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const RrefResult reduced = rref(augmented);
  if (reduced.rank < n || reduced.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = reduced.reduced(r, n + c);
  }
  return out;
}

Matrix evaluate(const Poly& p, const Matrix& m) {
  require_square(m, "evaluate");
  Matrix acc(m.rows(), m.cols());
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c[k];
  }
  return acc;
}

Poly min_poly_matrix(const Matrix& m) {
  require_square(m, "min_poly_matrix");
  if (m.rows() == 0) throw InputError("min_poly_matrix: empty matrix");
  const std::size_t n = m.rows();
  return krylov_minimal_polynomial(Matrix::identity(n).entries(), [&](const std::vector<Rational>& v) {
    return (Matrix(n, n, v) * m).entries();
  });
}

bool is_diagonalizable(const Matrix& m) {
  require_square(m, "is_diagonalizable");
  const Poly mu = min_poly_matrix(m);
  return mu.degree() < 1 || is_separable(mu);
}

}  // namespace primel
