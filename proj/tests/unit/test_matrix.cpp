#include "doctest.h"

#include "primel/error.hpp"
#include "primel/generators.hpp"
#include "primel/matrix.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace primel;

namespace {

Matrix random_matrix(fixtures::Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.uniform(0, 2) == 0 ? Rational(0) : Rational(rng.uniform(-3, 3));
  }
  return m;
}

Matrix conjugated(const Matrix& m, const Matrix& s) { return s * m * *inverse(s); }

}  // namespace

TEST_CASE("matrix arithmetic examples") {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  CHECK(Matrix::identity(3) * m == m);
  const auto [a, b] = frobenius_pair();
  CHECK((a * b).is_zero());
  CHECK(mat_add(m, mat_scale(-1, m)).is_zero());
  CHECK_THROWS_AS(mat_mul(Matrix(2, 3), Matrix(2, 3)), InputError);
  CHECK_THROWS_AS(mat_add(Matrix(2, 3), Matrix(3, 2)), InputError);
  CHECK_THROWS_AS(Matrix(2, 2, {Rational(1)}), InputError);
  CHECK(m.transpose()(0, 2) == Rational(7));
}

TEST_CASE("rref examples") {
  const auto id = rref(Matrix::identity(4));
  CHECK(id.reduced == Matrix::identity(4));
  CHECK(id.rank == 4);
  const auto zero = rref(Matrix(3, 2));
  CHECK(zero.reduced.is_zero());
  CHECK(zero.rank == 0);
  const auto r = rref(Matrix::from_rows({{1, 2}, {2, 4}}));
  CHECK(r.reduced == Matrix::from_rows({{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("solve_linear examples") {
  const std::vector<Rational> b{5, -7, 2};
  CHECK(solve_linear(Matrix::identity(3), b) == b);
  const Matrix a = Matrix::from_rows({{1, 1}, {2, 2}});
  const std::vector<Rational> inconsistent{1, 3};
  CHECK_FALSE(solve_linear(a, inconsistent).has_value());
  const std::vector<Rational> consistent{1, 2};
  CHECK(solve_linear(a, consistent) == std::vector<Rational>{1, 0});
  CHECK_THROWS_AS(solve_linear(a, b), InputError);
}

TEST_CASE("inverse") {
  CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})).has_value());
  const Matrix m = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(*inverse(m) == Matrix::from_rows({{1, -1}, {-1, 2}}));
  CHECK_THROWS_AS(inverse(Matrix(2, 3)), InputError);
}

TEST_CASE("min_poly_matrix examples") {
  const auto [a, b] = frobenius_pair();
  CHECK(min_poly_matrix(a) == Poly::monomial(1, 2));
  CHECK(min_poly_matrix(Matrix::identity(4)) == Poly::from_integers({-1, 1}));
  const Poly f = Poly::from_integers({2, -3, 0, 1});
  CHECK(min_poly_matrix(companion(f)) == f);
  CHECK(oracle::is_minimal_polynomial_of(f, companion(f)));
  CHECK_THROWS_AS(min_poly_matrix(Matrix(2, 3)), InputError);
  CHECK(min_poly_matrix(a).variable() == "t");
}

TEST_CASE("is_diagonalizable examples") {
  const std::vector<Rational> d{1, 2, 3};
  CHECK(is_diagonalizable(Matrix::diagonal(d)));
  const auto [a, b] = frobenius_pair();
  CHECK_FALSE(is_diagonalizable(a));
  CHECK_FALSE(is_diagonalizable(companion(Poly::from_integers({1, 2, 1}))));
  CHECK_THROWS_AS(is_diagonalizable(Matrix(1, 2)), InputError);
}

TEST_CASE("minimal polynomial properties on random matrices") {
  fixtures::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const Matrix m = random_matrix(rng, n);
    const Poly mu = min_poly_matrix(m);
    CHECK(mu.degree() <= static_cast<long>(n));
    CHECK(evaluate(mu, m).is_zero());
    CHECK(oracle::is_minimal_polynomial_of(mu, m));
    if (trial % 4 == 0) {
      const Matrix s = random_unimodular(n, rng.raw());
      CHECK(min_poly_matrix(conjugated(m, s)) == mu);
    }
  }
}

TEST_CASE("diagonalizability agrees with the construction of split fixtures") {
  fixtures::Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
    const Matrix s = random_unimodular(n, rng.raw());
    std::vector<Rational> d;
    for (std::size_t i = 0; i < n; ++i) d.emplace_back(rng.uniform(-3, 3));
    CHECK(is_diagonalizable(conjugated(Matrix::diagonal(d), s)));
    Matrix j = Matrix::diagonal(d);
    const auto at = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    j(at + 1, at + 1) = j(at, at);
    j(at, at + 1) = 1;
    CHECK_FALSE(is_diagonalizable(conjugated(j, s)));
  }
}

TEST_CASE("rref rank agrees with the independent elimination") {
  fixtures::Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    Matrix m(rows, cols);
    std::vector<std::vector<Rational>> vs(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) vs[r][c] = m(r, c) = rng.uniform(0, 1) ? Rational(rng.uniform(-2, 2)) : Rational(0);
    }
    CHECK(rref(m).rank == oracle::rank_of(vs));
  }
}
