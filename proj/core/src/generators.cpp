#include "primel/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "primel/error.hpp"

namespace primel {

Matrix companion(const Poly& f) {
  if (f.degree() < 1) throw InputError("companion: polynomial must have degree >= 1");
  if (!f.is_monic()) throw InputError("companion: polynomial must be monic");
  const auto m = static_cast<std::size_t>(f.degree());
  Matrix c(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) c(i, i + 1) = 1;
  for (std::size_t j = 0; j < m; ++j) c(m - 1, j) = -f.coefficients()[j];
  return c;
}

CounterexampleSpec::CounterexampleSpec(const Poly& f, const Poly& g, std::optional<std::uint64_t> seed)
    : seed_(seed) {
  for (const Poly* p : {&f, &g}) {
    if (p->degree() < 2) throw InputError("counterexample polynomials need degree >= 2");
    if (is_separable(*p)) {
      throw InputError("counterexample polynomial " + p->to_string() + " is separable");
    }
  }
  f_ = f.monic().with_variable("x");
  g_ = g.monic().with_variable("y");
}

std::size_t CounterexampleSpec::size() const {
  return static_cast<std::size_t>(f_.degree() * g_.degree());
}

std::pair<Matrix, Matrix> rho_pair(const CounterexampleSpec& spec) {
  const auto m = static_cast<std::size_t>(spec.f().degree());
  const auto k = static_cast<std::size_t>(spec.g().degree());
  const std::size_t n = m * k;
  const Matrix cf = companion(spec.f());
  Matrix rho_f(n, n);
  Matrix rho_g(n, n);
  for (std::size_t block = 0; block < k; ++block) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) rho_f(block * m + i, block * m + j) = cf(i, j);
    }
  }
  for (std::size_t block = 0; block + 1 < k; ++block) {
    for (std::size_t i = 0; i < m; ++i) rho_g(block * m + i, (block + 1) * m + i) = 1;
  }
  for (std::size_t block = 0; block < k; ++block) {
    const Rational entry = -spec.g().coefficients()[block];
    for (std::size_t i = 0; i < m; ++i) rho_g((k - 1) * m + i, block * m + i) = entry;
  }
  return {std::move(rho_f), std::move(rho_g)};
}

std::pair<Matrix, Matrix> frobenius_pair() {
  return {Matrix::from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
          Matrix::from_rows({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})};
}

Matrix random_unimodular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() { return Rational(static_cast<long>(rng() % 5) - 2); };
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = draw();
      upper(j, i) = draw();
    }
  }
  return lower * upper;
}

ConjugatedPair conjugate(const Matrix& a, const Matrix& b, const Matrix& s) {
  const auto s_inv = inverse(s);
  if (!s_inv) throw InputError("conjugating matrix is singular");
  return {s * a * *s_inv, s * b * *s_inv, s};
}

ConjugatedPair random_conjugate(const Matrix& a, const Matrix& b, std::uint64_t seed) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square()) {
    throw InputError("random_conjugate: matrices must be square of one size");
  }
  return conjugate(a, b, random_unimodular(a.rows(), seed));
}

Poly sample_inseparable(std::size_t degree, std::uint64_t seed) {
  if (degree < 2) throw InputError("an inseparable polynomial needs degree >= 2");
  std::mt19937_64 rng(seed);
  std::vector<long> roots;
  const long span = static_cast<long>(2 * degree + 3);
  while (roots.size() + 1 < degree) {
    const long r = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  Poly out = Poly::linear(roots.front()).pow(2);
  for (std::size_t i = 1; i < roots.size(); ++i) out *= Poly::linear(roots[i]);
  return out;
}

}  // namespace primel
