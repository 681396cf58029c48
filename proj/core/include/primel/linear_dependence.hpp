#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primel/poly.hpp"
#include "primel/rational.hpp"

namespace primel {

/// Incremental row echelon form that remembers how each stored row was built
/// from the accepted input vectors, so a dependent vector can be written as
/// an explicit combination of them.
class LinearDependenceTracker {
 public:
  explicit LinearDependenceTracker(std::size_t dimension) : dimension_(dimension) {}

  /// If `v` lies in the span of the vectors accepted so far, returns the
  /// coefficients expressing it (one per accepted vector, in acceptance
  /// order) and leaves the tracker unchanged. Otherwise accepts `v` and
  /// returns nullopt.
  std::optional<std::vector<Rational>> add(const std::vector<Rational>& v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
  // rows_[k] = sum_j combos_[k][j] * input_j
  std::vector<std::vector<Rational>> combos_;
};

/// Minimal polynomial of an element of a finite-dimensional algebra, found as
/// the first linear dependence among 1, e, e^2, ... in coordinates.
/// `one` is the coordinate vector of the identity, `times_e` maps the
/// coordinates of e^k to those of e^(k+1).
template <class TimesE>
Poly krylov_minimal_polynomial(std::vector<Rational> one, TimesE times_e,
                               const std::string& variable = "t") {
  LinearDependenceTracker tracker(one.size());
  std::vector<Rational> current = std::move(one);
  for (std::size_t degree = 0;; ++degree) {
    if (auto coeffs = tracker.add(current)) {
      std::vector<Rational> poly(degree + 1);
      for (std::size_t j = 0; j < degree; ++j) poly[j] = -(*coeffs)[j];
      poly[degree] = 1;
      return Poly(std::move(poly), variable);
    }
    current = times_e(current);
  }
}

}  // namespace primel
