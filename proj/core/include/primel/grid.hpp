#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "primel/multipoly.hpp"
#include "primel/poly.hpp"
#include "primel/quotient.hpp"
#include "primel/rational.hpp"

namespace primel {

struct GridRoot {
  Rational root;
  unsigned multiplicity = 1;
  friend bool operator==(const GridRoot&, const GridRoot&) = default;
};

/// One point of a root grid together with its per-axis multiplicities.
struct GridPoint {
  std::vector<Rational> coordinates;
  std::vector<unsigned> multiplicities;

  /// sum_i nu_i(a_i) - n + 1, the exponent this point carries in the
  /// minimal polynomial of an injective linear form.
  unsigned local_exponent() const;
};

/// Rational root grid A_1 x ... x A_n with multiplicities: models the
/// generators f_i = prod_{a in A_i} (x_i - a)^nu_i(a).
class GridSpec {
 public:
  /// Throws InputError on an empty axis, a repeated root, or multiplicity 0.
  explicit GridSpec(std::vector<std::vector<GridRoot>> axes);

  std::size_t arity() const { return axes_.size(); }
  const std::vector<std::vector<GridRoot>>& axes() const { return axes_; }
  std::size_t point_count() const;

  /// prod_{a in A_i} (x_i - a)^nu_i(a), in the axis' default variable.
  Poly axis_polynomial(std::size_t axis) const;
  QuotientAlgebra algebra() const;

  /// Visits every grid point, first axis varying fastest.
  void for_each_point(const std::function<void(const GridPoint&)>& visit) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  std::vector<std::vector<GridRoot>> axes_;
};

/// prod_{a in A} (t - g(a))^(sum_i nu_i(a_i) - n + 1). Throws
/// ContractViolation if g takes the same value at two grid points.
Poly min_poly_of_injective_form(const GridSpec& grid, const LinearForm& form);

/// p lies in the ideal iff every mixed partial d^m p vanishes at every grid
/// point a for 0 <= m_i < nu_i(a_i).
bool hermite_membership(const MultiPoly& p, const GridSpec& grid);

/// F(t) = prod_{a in A} (t - p(a))^(sum_i nu_i(a_i) - n + 1). F(p) lies in
/// the ideal and the minimal polynomial of p's residue class divides F.
Poly build_annihilator(const MultiPoly& p, const GridSpec& grid);

}  // namespace primel
