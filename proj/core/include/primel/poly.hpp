#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "primel/rational.hpp"

namespace primel {

/// Degree reported for the zero polynomial.
inline constexpr long kZeroPolyDegree = std::numeric_limits<long>::min();

/// Dense univariate polynomial over the rationals, coefficients stored
/// low-degree-first. The zero polynomial has no coefficients; a nonzero
/// polynomial never carries a zero leading coefficient.
///
/// The variable name is a display label only: equality ignores it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs, std::string variable = "x");

  static Poly constant(const Rational& c, std::string variable = "x");
  static Poly monomial(const Rational& c, std::size_t degree, std::string variable = "x");
  /// x - root
  static Poly linear(const Rational& root, std::string variable = "x");
  static Poly from_integers(std::initializer_list<long> coeffs, std::string variable = "x");

  long degree() const {
    return coeffs_.empty() ? kZeroPolyDegree : static_cast<long>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const;
  const std::string& variable() const { return variable_; }
  Poly with_variable(std::string variable) const;

  Rational evaluate(const Rational& x) const;
  Poly monic() const;
  Poly pow(unsigned exponent) const;
  Poly scaled(const Rational& c) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  Poly operator-() const;

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// Human-readable form such as "x^3 - 3*x + 2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
  std::string variable_ = "x";
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws DegenerateInputError for a zero divisor.
PolyDivision divmod(const Poly& dividend, const Poly& divisor);
bool divides(const Poly& divisor, const Poly& dividend);

/// Monic gcd. gcd(f, 0) = monic(f); gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);
Poly derivative(const Poly& f);

/// True iff f has no repeated root in the algebraic closure.
/// Requires degree >= 1.
bool is_separable(const Poly& f);

/// f / gcd(f, f'), made monic: same roots as f, each with multiplicity one.
Poly squarefree_part(const Poly& f);

/// Resultant with the Sylvester convention
///   Res(f, g) = lc(f)^deg(g) * lc(g)^deg(f) * prod_{f(a)=0, g(b)=0} (a - b),
/// so Res(x - 2, x - 3) = -1. Computed as an integer Bareiss determinant of
/// the Sylvester matrix after clearing denominators.
Rational resultant(const Poly& f, const Poly& g);

/// Monic polynomial in t whose roots are {a + c*b : f(a) = 0, g(b) = 0},
/// counted with multiplicity over all pairs. Obtained as Res_y(g(y), f(t - c*y))
/// without extracting roots. f and g must be squarefree and c nonzero.
Poly values_poly(const Poly& f, const Poly& g, const Rational& c);

}  // namespace primel
