#pragma once

// Seeded generators for property tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "primel/generators.hpp"
#include "primel/grid.hpp"
#include "primel/matrix.hpp"
#include "primel/multipoly.hpp"
#include "primel/poly.hpp"

namespace primel::fixtures {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (engine_() & 1U) != 0; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline Rational small_rational(Rng& rng, long magnitude = 5) {
  const long num = rng.uniform(-magnitude, magnitude);
  const long den = rng.uniform(1, 3);
  return Rational(Integer(num), Integer(den));
}

inline std::vector<long> distinct_ints(Rng& rng, std::size_t count, long lo, long hi) {
  std::set<long> seen;
  std::vector<long> out;
  while (out.size() < count) {
    const long v = rng.uniform(lo, hi);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

/// Random rational-root grid with n axes and basis size <= max_dim.
inline GridSpec random_grid(Rng& rng, std::size_t n, std::size_t max_dim) {
  for (;;) {
    std::vector<std::vector<GridRoot>> axes;
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t roots = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto values = distinct_ints(rng, roots, -4, 4);
      std::vector<GridRoot> axis;
      std::size_t degree = 0;
      for (long v : values) {
        const auto mult = static_cast<unsigned>(rng.uniform(1, 3));
        // half-integers keep the grids genuinely rational
        const Rational root = rng.coin() ? Rational(v) : Rational(Integer(2 * v + 1), Integer(2));
        axis.push_back(GridRoot{root, mult});
        degree += mult;
      }
      // half-integer conversion may collide; fall back to integers then
      std::set<Rational> seen;
      bool clash = false;
      for (const auto& r : axis) clash |= !seen.insert(r.root).second;
      if (clash) {
        for (std::size_t k = 0; k < axis.size(); ++k) axis[k].root = Rational(values[k]);
      }
      dim *= degree;
      axes.push_back(std::move(axis));
    }
    if (dim <= max_dim) return GridSpec(std::move(axes));
  }
}

/// Random sparse polynomial with exponents up to max_exp per variable.
inline MultiPoly random_multipoly(Rng& rng, std::size_t arity, unsigned max_exp, std::size_t terms) {
  MultiPoly p(arity);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(arity);
    for (auto& x : e) x = static_cast<unsigned>(rng.uniform(0, max_exp));
    p.add_term(e, small_rational(rng, 4));
  }
  return p;
}

/// Random monic polynomial of the given degree with small integer coefficients.
inline Poly random_monic(Rng& rng, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  for (std::size_t k = 0; k < degree; ++k) c[k] = Rational(rng.uniform(-5, 5));
  c[degree] = 1;
  return Poly(std::move(c));
}

/// Nonzero polynomial of degree <= max_degree with rational coefficients.
inline Poly random_poly(Rng& rng, std::size_t max_degree) {
  for (;;) {
    const auto degree = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_degree)));
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) v = small_rational(rng, 6);
    Poly p(std::move(c));
    if (p.degree() >= 1) return p;
  }
}

inline Poly from_integer_roots(const std::vector<long>& roots, const std::string& var = "x") {
  Poly out = Poly::constant(1, var);
  for (long r : roots) out *= Poly::linear(Rational(r), var);
  return out;
}

/// Univariate generator for algebra families: separable or not, with either
/// rational or irrational roots.
inline Poly random_generator(Rng& rng, bool separable) {
  const std::size_t distinct = static_cast<std::size_t>(rng.uniform(1, 3));
  const auto roots = distinct_ints(rng, distinct, -5, 5);
  Poly out = from_integer_roots(roots);
  if (rng.coin()) {
    // multiply by an irreducible quadratic x^2 - q with q not a square
    static const long kNonSquares[] = {2, 3, 5, 6, 7};
    out *= Poly::from_integers({-kNonSquares[rng.uniform(0, 4)], 0, 1});
  }
  if (!separable) out *= Poly::linear(Rational(roots.front())).pow(static_cast<unsigned>(rng.uniform(1, 2)));
  return out;
}

/// Commuting family of size n with m members, at most one of them
/// non-diagonalizable: block-scalar diagonal members plus an optional Jordan
/// member on the same block partition, then conjugated by a unimodular S.
inline std::vector<Matrix> random_commuting_family(Rng& rng, std::size_t n, std::size_t m,
                                                   bool with_jordan) {
  std::vector<std::size_t> blocks;
  std::size_t used = 0;
  while (used < n) {
    const std::size_t b = with_jordan ? static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n - used)))
                                      : 1;
    blocks.push_back(b);
    used += b;
  }
  if (with_jordan && std::all_of(blocks.begin(), blocks.end(), [](std::size_t b) { return b == 1; }) && n >= 2) {
    blocks.assign({2});
    for (std::size_t k = 2; k < n; ++k) blocks.push_back(1);
  }
  std::vector<Matrix> family;
  const std::size_t diagonal_members = with_jordan ? m - 1 : m;
  for (std::size_t k = 0; k < diagonal_members; ++k) {
    Matrix d(n, n);
    std::size_t offset = 0;
    for (std::size_t b : blocks) {
      const Rational value(rng.uniform(-3, 3));
      for (std::size_t i = 0; i < b; ++i) d(offset + i, offset + i) = value;
      offset += b;
    }
    family.push_back(std::move(d));
  }
  if (with_jordan) {
    Matrix j(n, n);
    std::size_t offset = 0;
    for (std::size_t b : blocks) {
      const Rational value(rng.uniform(-3, 3));
      for (std::size_t i = 0; i < b; ++i) {
        j(offset + i, offset + i) = value;
        if (i + 1 < b) j(offset + i, offset + i + 1) = 1;
      }
      offset += b;
    }
    family.push_back(std::move(j));
  }
  const Matrix s = random_unimodular(n, rng.raw());
  const Matrix s_inv = *inverse(s);
  for (auto& a : family) a = s * a * s_inv;
  return family;
}

}  // namespace primel::fixtures
