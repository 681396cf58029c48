#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "primel/matrix.hpp"
#include "primel/poly.hpp"

namespace primel {

/// Companion matrix with ones on the superdiagonal and last row
/// (-a_0, -a_1, ..., -a_{m-1}). Its minimal polynomial is f.
/// Throws InputError unless f is monic of degree >= 1.
Matrix companion(const Poly& f);

/// A pair (f, g) of inseparable polynomials; the block pair built from it
/// has size deg f * deg g. f and g are stored monic.
class CounterexampleSpec {
 public:
  /// Throws InputError if either polynomial is separable or of degree < 2.
  CounterexampleSpec(const Poly& f, const Poly& g, std::optional<std::uint64_t> seed = std::nullopt);

  const Poly& f() const { return f_; }
  const Poly& g() const { return g_; }
  const std::optional<std::uint64_t>& seed() const { return seed_; }
  std::size_t size() const;

 private:
  Poly f_;
  Poly g_;
  std::optional<std::uint64_t> seed_;
};

/// Regular representations of x and y on Q[x, y] / (f, g) in the basis
/// 1, x, ..., x^(m-1), y, xy, ..., x^(m-1) y^(k-1): the first is
/// block-diagonal with k copies of C(f), the second is the block companion
/// of g with m x m identity blocks. The seed, if any, is ignored here.
std::pair<Matrix, Matrix> rho_pair(const CounterexampleSpec& spec);

/// The classic 3x3 pair with A = E_12, B = E_13.
std::pair<Matrix, Matrix> frobenius_pair();

/// S = L * U with seeded unit lower/upper triangular integer factors, so
/// det S = 1 and S^-1 is exact.
Matrix random_unimodular(std::size_t n, std::uint64_t seed);

struct ConjugatedPair {
  Matrix a;
  Matrix b;
  Matrix s;
};

/// (S A S^-1, S B S^-1, S) for an invertible S.
ConjugatedPair conjugate(const Matrix& a, const Matrix& b, const Matrix& s);
ConjugatedPair random_conjugate(const Matrix& a, const Matrix& b, std::uint64_t seed);

/// Monic inseparable polynomial of the given degree (>= 2): distinct small
/// integer roots with the first one doubled.
Poly sample_inseparable(std::size_t degree, std::uint64_t seed);

}  // namespace primel
