#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "primel/matrix.hpp"
#include "primel/multipoly.hpp"
#include "primel/poly.hpp"

namespace primel {

/// Basis of the unital algebra Q[A_1, ..., A_m] generated by commuting
/// matrices. The basis consists of the monomial products A^e (exponents
/// below each deg mu_{A_i}) that were linearly independent of the earlier
/// ones, in enumeration order with the first generator varying fastest.
struct SpanBasis {
  std::vector<Matrix> generator_matrices;
  std::vector<Matrix> basis;
  std::vector<Exponents> basis_exponents;
  std::vector<std::size_t> degree_bounds;

  std::size_t dimension() const { return basis.size(); }
};

/// True iff every pair commutes. Throws InputError unless all matrices are
/// square of one size.
bool commute_check(std::span<const Matrix> ms);

/// Throws InputError for non-commuting or empty input.
SpanBasis span_basis(std::span<const Matrix> ms);
std::size_t span_dimension(std::span<const Matrix> ms);

/// p with deg p < deg mu_source and p(source) = target, or nullopt when
/// target is not in Q[source].
std::optional<Poly> express_as_polynomial(const Matrix& target, const Matrix& source);

/// Largest minimal-polynomial degree seen over `trials` random elements of
/// the span, each a combination of the SpanBasis with integer weights in
/// [-10, 10]. Trial k draws from its own stream derived from (seed, k), so
/// the result depends only on (ms, trials, seed).
std::size_t monte_carlo_codim(std::span<const Matrix> ms, std::size_t trials, std::uint64_t seed);
std::size_t monte_carlo_codim(const SpanBasis& span, std::size_t trials, std::uint64_t seed);

}  // namespace primel
