#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "primel/poly.hpp"
#include "primel/rational.hpp"

namespace primel {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial in a fixed number of variables. Only used as an input
/// to quotient operations; there is no general multivariate division.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit MultiPoly(std::size_t arity) : arity_(arity) {}
  /// Throws InputError if any exponent vector has the wrong length.
  MultiPoly(std::size_t arity, const Terms& terms);

  static MultiPoly constant(std::size_t arity, const Rational& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  /// Embeds a univariate polynomial as a polynomial in variable `index`.
  static MultiPoly from_univariate(std::size_t arity, std::size_t index, const Poly& p);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Rational& coef);

  Rational evaluate(std::span<const Rational> point) const;
  /// d^order / d x_var^order
  MultiPoly partial(std::size_t var, unsigned order) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned exponent) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.arity_ == rhs.arity_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_same_arity(const MultiPoly& rhs) const;

  std::size_t arity_ = 0;
  Terms terms_;
};

/// outer(inner), expanded.
MultiPoly compose(const Poly& outer, const MultiPoly& inner);

}  // namespace primel
