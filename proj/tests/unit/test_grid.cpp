#include "doctest.h"

#include <set>

#include "primel/error.hpp"
#include "primel/grid.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace primel;

namespace {

// {1 (x2), -2 (x1)} x {-1 (x2)}: the roots of x^3 - 3x + 2 and y^2 + 2y + 1
GridSpec cubic_by_square_grid() {
  return GridSpec({{{Rational(1), 2}, {Rational(-2), 1}}, {{Rational(-1), 2}}});
}

MultiPoly linear_poly(const std::vector<long>& coeffs, long constant = 0) {
  MultiPoly p = MultiPoly::constant(coeffs.size(), Rational(constant));
  for (std::size_t i = 0; i < coeffs.size(); ++i) p += MultiPoly::variable(coeffs.size(), i).scaled(coeffs[i]);
  return p;
}

}  // namespace

TEST_CASE("grid validation and reconstruction") {
  const auto grid = cubic_by_square_grid();
  CHECK(grid.point_count() == 2);
  CHECK(grid.axis_polynomial(0) == Poly::from_integers({2, -3, 0, 1}));
  CHECK(grid.axis_polynomial(1) == Poly::from_integers({1, 2, 1}));
  CHECK(grid.axis_polynomial(1).variable() == "y");
  CHECK_THROWS_AS(GridSpec(std::vector<std::vector<GridRoot>>(1)), InputError);
  CHECK_THROWS_AS(GridSpec({{{Rational(1), 1}, {Rational(1), 2}}}), InputError);
  CHECK_THROWS_AS(GridSpec({{{Rational(1), 0}}}), InputError);
  std::vector<unsigned> exponents;
  grid.for_each_point([&](const GridPoint& a) { exponents.push_back(a.local_exponent()); });
  CHECK(exponents == std::vector<unsigned>{3, 2});
}

TEST_CASE("min_poly_of_injective_form examples") {
  const Poly expected = Poly::linear(-1).pow(3) * Poly::linear(-4).pow(2);
  const Poly mu = min_poly_of_injective_form(cubic_by_square_grid(), LinearForm({1, 2}));
  CHECK(mu == expected);
  CHECK(mu.degree() == 5);
  CHECK(mu.degree() == static_cast<long>(codim_quotient(cubic_by_square_grid().algebra())));
  const GridSpec simple({{{Rational(0), 1}, {Rational(1), 1}}, {{Rational(0), 1}}});
  CHECK(min_poly_of_injective_form(simple, LinearForm({1, 1})) == Poly::linear(0) * Poly::linear(1));
  const GridSpec single({{{Rational(2), 3}}});
  CHECK(min_poly_of_injective_form(single, LinearForm({1})) == Poly::linear(2).pow(3));
  const GridSpec square({{{Rational(0), 1}, {Rational(1), 1}}, {{Rational(0), 1}, {Rational(1), 1}}});
  CHECK_THROWS_AS(min_poly_of_injective_form(square, LinearForm({1, 1})), ContractViolation);
}

TEST_CASE("hermite_membership examples") {
  const auto grid = cubic_by_square_grid();
  CHECK(hermite_membership(MultiPoly::from_univariate(2, 0, grid.axis_polynomial(0)), grid));
  CHECK_FALSE(hermite_membership(MultiPoly::constant(2, 1), grid));
  const MultiPoly p = linear_poly({1, 0}, -1) * linear_poly({0, 1}, 1);
  CHECK_FALSE(hermite_membership(p, grid));
  CHECK_FALSE(normal_form(p, grid.algebra()).is_zero());
  // (x-1)^2 (x+2) (y+1)^0 times anything stays inside
  CHECK(hermite_membership(p * MultiPoly::from_univariate(2, 0, Poly::from_integers({-2, 1, 1})) * linear_poly({0, 1}, 1), grid));
}

TEST_CASE("build_annihilator examples") {
  const auto grid = cubic_by_square_grid();
  const Poly expected = Poly::linear(-1).pow(3) * Poly::linear(-4).pow(2);
  CHECK(build_annihilator(linear_poly({1, 2}), grid) == expected);
  CHECK(build_annihilator(MultiPoly::constant(2, 7), grid) == Poly::linear(7).pow(5));
  const GridSpec single({{{Rational(2), 2}}});
  const MultiPoly x = MultiPoly::variable(1, 0);
  CHECK(build_annihilator(x, single) == Poly::linear(2).pow(2));
  CHECK(normal_form(compose(Poly::linear(2).pow(2), x), single.algebra()).is_zero());
}

TEST_CASE("membership oracle agrees with normal form") {
  fixtures::Rng rng(31);
  int disagreements = 0;
  int members = 0;
  int total = 0;
  for (int g = 0; g < 12; ++g) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 3));
    const GridSpec grid = fixtures::random_grid(rng, n, 24);
    const auto alg = grid.algebra();
    for (int k = 0; k < 110; ++k) {
      MultiPoly p = fixtures::random_multipoly(rng, n, 4, static_cast<std::size_t>(rng.uniform(1, 4)));
      if (k % 3 == 0) {
        // force a member by multiplying with a generator
        const auto axis = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        p = p * MultiPoly::from_univariate(n, axis, grid.axis_polynomial(axis));
        if (k % 2 == 0) p += fixtures::random_multipoly(rng, n, 1, 1).scaled(rng.uniform(0, 1));
      }
      const bool by_derivatives = hermite_membership(p, grid);
      const bool by_division = normal_form(p, alg).is_zero();
      disagreements += by_derivatives != by_division ? 1 : 0;
      members += by_division ? 1 : 0;
      ++total;
    }
  }
  CHECK(disagreements == 0);
  CHECK(total >= 1000);
  CHECK(members > 100);
  CHECK(members < total);
}

TEST_CASE("annihilator kills p and is divisible by its minimal polynomial") {
  fixtures::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 3));
    const GridSpec grid = fixtures::random_grid(rng, n, 24);
    const auto alg = grid.algebra();
    const MultiPoly p = fixtures::random_multipoly(rng, n, 3, static_cast<std::size_t>(rng.uniform(1, 4)));
    const Poly F = build_annihilator(p, grid);
    CHECK(static_cast<std::size_t>(F.degree()) == oracle::enumerate_codim(grid));
    const QElem residue = normal_form(p, alg);
    CHECK(evaluate(F, residue).is_zero());
    CHECK(normal_form(compose(F, p), alg).is_zero());
    const Poly mu = min_poly_residue(residue);
    CHECK(divides(mu, F));
  }
}

TEST_CASE("closed-form minimal polynomial of injective forms") {
  fixtures::Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 3));
    const GridSpec grid = fixtures::random_grid(rng, n, 24);
    const auto alg = grid.algebra();
    // injective coefficients chosen by brute force on the explicit grid
    std::vector<Rational> c{Rational(1)};
    for (std::size_t i = 1; i < n; ++i) c.push_back(Rational(rng.uniform(1, 4)) * Rational(rng.coin() ? 7 : -11));
    const LinearForm g(c);
    std::set<Rational> values;
    grid.for_each_point([&](const GridPoint& a) { values.insert(g.evaluate(a.coordinates)); });
    if (values.size() != grid.point_count()) {
      CHECK_THROWS_AS(min_poly_of_injective_form(grid, g), ContractViolation);
      continue;
    }
    const Poly closed = min_poly_of_injective_form(grid, g);
    CHECK(min_poly_residue(g.residue(alg)) == closed);
    CHECK(static_cast<std::size_t>(closed.degree()) == codim_quotient(alg));
    if (has_primitive_element(alg)) {
      const LinearForm found = find_primitive_linear_form(alg);
      CHECK(min_poly_residue(found.residue(alg)) == min_poly_of_injective_form(grid, found));
    }
  }
}
