#include "doctest.h"

#include <vector>

#include "primel/error.hpp"
#include "primel/poly.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace primel;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_integers(c); }

}  // namespace

TEST_CASE("zero polynomial representation") {
  const Poly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == kZeroPolyDegree);
  CHECK(zero.coefficients().empty());
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(P({1, 2, 0}).degree() == 1);
  CHECK(P({2, -3, 0, 1}).to_string() == "x^3 - 3*x + 2");
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P({1, 2, 1}), P({2, 2})) == P({1, 1}));
  CHECK(poly_gcd(P({-6, 3}), Poly()) == P({-2, 1}));
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(poly_gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("derivative examples") {
  CHECK(derivative(P({2, -3, 0, 1})) == P({-3, 0, 3}));
  CHECK(derivative(P({5})).is_zero());
  CHECK(derivative(P({1, 2, 1})) == P({2, 2}));
}

TEST_CASE("is_separable examples and errors") {
  CHECK_FALSE(is_separable(P({1, 2, 1})));
  CHECK_FALSE(is_separable(P({2, -3, 0, 1})));
  CHECK(is_separable(P({0, 1})));
  CHECK_THROWS_AS(is_separable(Poly()), DegenerateInputError);
  CHECK_THROWS_AS(is_separable(P({4})), DegenerateInputError);
  CHECK_THROWS_AS(squarefree_part(P({4})), DegenerateInputError);
}

TEST_CASE("squarefree_part examples") {
  CHECK(squarefree_part(P({2, -3, 0, 1})) == P({-2, 1, 1}));
  CHECK(squarefree_part(P({1, 2, 1})) == P({1, 1}));
  CHECK(squarefree_part(P({-2, 0, 1})) == P({-2, 0, 1}));
  CHECK(squarefree_part(P({4, 4, 2})) == P({2, 2, 1}));
}

TEST_CASE("resultant examples and sign convention") {
  CHECK(resultant(P({-2, 1}), P({-3, 1})) == Rational(-1));
  CHECK(resultant(P({-3, 1}), P({-2, 1})) == Rational(1));
  CHECK(resultant(P({-1, 0, 1}), P({-1, 1})) == Rational(0));
  CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == Rational(1));
  CHECK_THROWS_AS(resultant(Poly(), P({1, 1})), DegenerateInputError);
  // leading coefficients enter as lc(f)^deg g * lc(g)^deg f
  CHECK(resultant(P({-4, 2}), P({-9, 3})) == Rational(2 * 3 * (2 - 3)));
  CHECK(resultant(P({3}), P({1, 1, 1})) == Rational(9));
}

TEST_CASE("resultant agrees with the Leibniz Sylvester determinant") {
  fixtures::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly f = fixtures::random_poly(rng, 3);
    const Poly g = fixtures::random_poly(rng, 3);
    CAPTURE(f.to_string());
    CAPTURE(g.to_string());
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("resultant agrees with the root product on split fixtures") {
  fixtures::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto ra = fixtures::distinct_ints(rng, static_cast<std::size_t>(rng.uniform(1, 4)), -6, 6);
    const auto rb = fixtures::distinct_ints(rng, static_cast<std::size_t>(rng.uniform(1, 4)), -6, 6);
    const Rational lf(rng.uniform(1, 3));
    const Rational lg(rng.uniform(-3, -1));
    std::vector<Rational> as(ra.begin(), ra.end());
    std::vector<Rational> bs(rb.begin(), rb.end());
    const Poly f = oracle::expand_roots(as).scaled(lf);
    const Poly g = oracle::expand_roots(bs).scaled(lg);
    CHECK(resultant(f, g) == oracle::root_product_resultant(lf, as, lg, bs));
  }
}

TEST_CASE("values_poly examples") {
  CHECK(values_poly(P({-1, 0, 1}), P({0, 1}), Rational(7)) == P({-1, 0, 1}));
  CHECK(values_poly(P({0, 1}), P({0, 1}), Rational(5)) == P({0, 1}));
  const Poly collide = values_poly(P({0, -1, 1}), P({0, -1, 1}), Rational(1));
  CHECK(collide == Poly::linear(0) * Poly::linear(1).pow(2) * Poly::linear(2));
  CHECK_FALSE(is_separable(collide));
  CHECK(values_poly(P({-2, 0, 1}), P({-3, 0, 1}), Rational(1)) == P({1, 0, -10, 0, 1}));
  CHECK(values_poly(P({0, 1}), P({0, 1}), Rational(5)).variable() == "t");
}

TEST_CASE("values_poly errors") {
  CHECK_THROWS_AS(values_poly(P({-1, 0, 1}), P({0, 1}), Rational(0)), InvalidCoefficientError);
  CHECK_THROWS_AS(values_poly(P({1, 2, 1}), P({0, 1}), Rational(1)), ContractViolation);
  CHECK_THROWS_AS(values_poly(P({0, 1}), P({0, 0, 1}), Rational(1)), ContractViolation);
}

TEST_CASE("values_poly agrees with the pair-sum oracle on split fixtures") {
  fixtures::Rng rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const auto ra = fixtures::distinct_ints(rng, static_cast<std::size_t>(rng.uniform(1, 4)), -5, 5);
    const auto rb = fixtures::distinct_ints(rng, static_cast<std::size_t>(rng.uniform(1, 4)), -5, 5);
    std::vector<Rational> as(ra.begin(), ra.end());
    std::vector<Rational> bs(rb.begin(), rb.end());
    Rational c = fixtures::small_rational(rng, 4);
    if (c.is_zero()) c = 1;
    const Poly v = values_poly(oracle::expand_roots(as), oracle::expand_roots(bs), c);
    CHECK(v.degree() == static_cast<long>(as.size() * bs.size()));
    CHECK(v == oracle::expand_roots(oracle::pair_sums(as, bs, c)));
  }
}

TEST_CASE("values_poly agrees with the power-sum composed sum on irreducible inputs") {
  fixtures::Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    Poly f = fixtures::random_monic(rng, static_cast<std::size_t>(rng.uniform(1, 4)));
    Poly g = fixtures::random_monic(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
    if (!is_separable(f) || !is_separable(g)) continue;
    Rational c = fixtures::small_rational(rng, 3);
    if (c.is_zero()) c = -1;
    CAPTURE(f.to_string());
    CAPTURE(g.to_string());
    const Poly v = values_poly(f, g, c);
    CHECK(v.degree() == f.degree() * g.degree());
    CHECK(v == oracle::composed_sum(f, g, c));
  }
}

TEST_CASE("gcd divides both inputs and absorbs common factors") {
  fixtures::Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly common = fixtures::random_poly(rng, 2);
    const Poly f = common * fixtures::random_poly(rng, 2);
    const Poly g = common * fixtures::random_poly(rng, 2);
    const Poly d = poly_gcd(f, g);
    CHECK(d.is_monic());
    CHECK(divides(d, f));
    CHECK(divides(d, g));
    CHECK(divides(common, d));
  }
}

TEST_CASE("separability properties") {
  fixtures::Rng rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly f = fixtures::random_poly(rng, 4);
    CHECK_FALSE(is_separable(f * f));
    const auto roots = fixtures::distinct_ints(rng, static_cast<std::size_t>(rng.uniform(1, 5)), -9, 9);
    const Poly split = fixtures::from_integer_roots(roots);
    CHECK(is_separable(split));
    if (is_separable(f)) {
      for (unsigned k = 1; k <= 3; ++k) CHECK(squarefree_part(f.pow(k)) == f.monic());
    }
    const Poly sf = squarefree_part(f);
    CHECK(divides(sf, f));
    CHECK(is_separable(sf));
  }
}

TEST_CASE("divmod reconstructs the dividend") {
  fixtures::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = fixtures::random_poly(rng, 6);
    const Poly b = fixtures::random_poly(rng, 3);
    const auto qr = divmod(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(qr.remainder.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(P({1, 1}), Poly()), DegenerateInputError);
}
