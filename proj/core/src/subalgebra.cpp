#include "primel/subalgebra.hpp"

#include <random>
#include <string>

#include "primel/error.hpp"
#include "primel/linear_dependence.hpp"

namespace primel {

namespace {

void require_uniform_square(std::span<const Matrix> ms) {
  if (ms.empty()) throw InputError("need at least one matrix");
  const std::size_t n = ms.front().rows();
  for (const auto& m : ms) {
    if (!m.is_square() || m.rows() != n) {
      throw InputError("all matrices must be square and of the same size");
    }
  }
  if (n == 0) throw InputError("matrices must be at least 1x1");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

}  // namespace

bool commute_check(std::span<const Matrix> ms) {
  require_uniform_square(ms);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[i] * ms[j] != ms[j] * ms[i]) return false;
    }
  }
  return true;
}

SpanBasis span_basis(std::span<const Matrix> ms) {
  if (!commute_check(ms)) throw InputError("span_basis: matrices do not commute");
  const std::size_t n = ms.front().rows();
  const std::size_t m = ms.size();
  SpanBasis out;
  out.generator_matrices.assign(ms.begin(), ms.end());

  std::vector<std::vector<Matrix>> powers(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t bound = static_cast<std::size_t>(min_poly_matrix(ms[i]).degree());
    out.degree_bounds.push_back(bound);
    powers[i].push_back(Matrix::identity(n));
    for (std::size_t k = 1; k < bound; ++k) powers[i].push_back(powers[i].back() * ms[i]);
  }

  LinearDependenceTracker tracker(n * n);
  Exponents e(m, 0);
  for (;;) {
    Matrix product = powers[0][e[0]];
    for (std::size_t i = 1; i < m; ++i) {
      if (e[i] != 0) product = product * powers[i][e[i]];
    }
    if (!tracker.add(product.entries())) {
      out.basis.push_back(std::move(product));
      out.basis_exponents.push_back(e);
    }
    std::size_t i = 0;
    while (i < m && ++e[i] == out.degree_bounds[i]) e[i++] = 0;
    if (i == m) break;
  }
  return out;
}

std::size_t span_dimension(std::span<const Matrix> ms) { return span_basis(ms).dimension(); }

std::optional<Poly> express_as_polynomial(const Matrix& target, const Matrix& source) {
  if (!source.is_square() || target.rows() != source.rows() || target.cols() != source.cols()) {
    throw InputError("express_as_polynomial: shape mismatch");
  }
  const std::size_t n = source.rows();
  const std::size_t d = static_cast<std::size_t>(min_poly_matrix(source).degree());
  Matrix system(n * n, d);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < n * n; ++r) system(r, k) = power.entries()[r];
    if (k + 1 < d) power = power * source;
  }
  auto solution = solve_linear(system, target.entries());
  if (!solution) return std::nullopt;
  return Poly(std::move(*solution), "t");
}

std::size_t monte_carlo_codim(const SpanBasis& span, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InputError("monte_carlo_codim: trials must be >= 1");
  const std::size_t n = span.basis.front().rows();
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials && best < span.dimension(); ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    Matrix element(n, n);
    for (const auto& b : span.basis) {
      const long weight = static_cast<long>(rng() % 21) - 10;
      if (weight != 0) element = element + mat_scale(Rational(weight), b);
    }
    const auto degree = static_cast<std::size_t>(min_poly_matrix(element).degree());
    best = std::max(best, degree);
  }
  return best;
}

std::size_t monte_carlo_codim(std::span<const Matrix> ms, std::size_t trials, std::uint64_t seed) {
  return monte_carlo_codim(span_basis(ms), trials, seed);
}

}  // namespace primel
