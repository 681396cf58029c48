#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "primel/multipoly.hpp"
#include "primel/poly.hpp"
#include "primel/rational.hpp"

namespace primel {

class QElem;

/// The finite algebra Q[x1, ..., xn] / (f1(x1), ..., fn(xn)).
///
/// Elements are represented on the monomial basis x^m with 0 <= m_i < deg f_i,
/// enumerated with the first variable varying fastest. Because every
/// generator is univariate, reduction is independent per-variable
/// remaindering. The handle is cheap to copy and immutable.
class QuotientAlgebra {
 public:
  /// Throws DegenerateInputError for a constant generator and InputError when
  /// the generator list is empty or names do not match.
  explicit QuotientAlgebra(std::vector<Poly> generators, std::vector<std::string> variables = {});

  std::size_t arity() const;
  const std::vector<Poly>& generators() const;
  const std::vector<std::string>& variables() const;
  const std::vector<std::size_t>& degrees() const;

  /// Number of basis monomials, prod deg f_i.
  std::size_t basis_size() const;
  std::vector<Exponents> basis_monomials() const;
  std::size_t index_of(const Exponents& exps) const;
  Exponents exponents_of(std::size_t index) const;

  /// Coordinates of x_axis^exponent mod f_axis on 1, x, ..., x^(d-1).
  std::vector<Rational> power_residue(std::size_t axis, unsigned exponent) const;

  /// Structural equality: same generators up to scaling, same arity.
  friend bool operator==(const QuotientAlgebra& lhs, const QuotientAlgebra& rhs);

 private:
  struct Impl;
  friend QElem operator*(const QElem& lhs, const QElem& rhs);
  std::shared_ptr<const Impl> impl_;
};

/// Default variable labels: x, y, z for up to three variables, else x1..xn.
std::vector<std::string> default_variable_names(std::size_t arity);

/// Residue class in a QuotientAlgebra, as dense coordinates on the basis.
class QElem {
 public:
  QElem(QuotientAlgebra algebra, std::vector<Rational> coordinates);

  static QElem zero(const QuotientAlgebra& algebra);
  static QElem constant(const QuotientAlgebra& algebra, const Rational& c);
  static QElem variable(const QuotientAlgebra& algebra, std::size_t index);

  const QuotientAlgebra& algebra() const { return algebra_; }
  const std::vector<Rational>& coordinates() const { return coords_; }
  Rational coefficient(const Exponents& exps) const;
  /// Nonzero coefficients keyed by basis exponent vector.
  std::map<Exponents, Rational> terms() const;
  bool is_zero() const;

  QElem& operator+=(const QElem& rhs);
  QElem& operator-=(const QElem& rhs);
  friend QElem operator+(QElem lhs, const QElem& rhs) { return lhs += rhs; }
  friend QElem operator-(QElem lhs, const QElem& rhs) { return lhs -= rhs; }
  friend QElem operator*(const QElem& lhs, const QElem& rhs);
  QElem operator-() const;
  QElem scaled(const Rational& c) const;
  QElem pow(unsigned exponent) const;

  friend bool operator==(const QElem& lhs, const QElem& rhs);

 private:
  void check_same_algebra(const QElem& rhs) const;

  QuotientAlgebra algebra_;
  std::vector<Rational> coords_;
};

QElem q_add(const QElem& a, const QElem& b);
QElem q_mul(const QElem& a, const QElem& b);
QElem q_scale(const Rational& c, const QElem& a);

/// Unique basis representative of p + I.
QElem normal_form(const MultiPoly& p, const QuotientAlgebra& algebra);
/// p(e) computed inside the algebra (Horner).
QElem evaluate(const Poly& p, const QElem& e);
/// The residue class of the polynomial, without reduction beyond the box.
MultiPoly lift(const QElem& e);

std::size_t dim_quotient(const QuotientAlgebra& algebra);

/// Maximum degree of a minimal polynomial over the algebra. Root-free closed
/// form  sum_i d_i * prod_{j != i} s_j - (n - 1) * prod_j s_j,  with d_i the
/// generator degrees and s_i the degrees of their squarefree parts.
std::size_t codim_quotient(const QuotientAlgebra& algebra);

/// Primitive element exists iff at most one generator is inseparable.
bool has_primitive_element(const QuotientAlgebra& algebra);
/// Same decision via codim == dim.
bool has_primitive_element_by_codim(const QuotientAlgebra& algebra);

/// For k_i >= 1: sum k_i - (n - 1) == prod k_i. This holds exactly when at
/// most one k_i exceeds 1. Throws InputError if some k_i < 1.
bool sum_product_identity(std::span<const Rational> ks);

/// g = x1 + c2 x2 + ... + cn xn with every c_i nonzero and c1 = 1.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coefficients);
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t arity() const { return coeffs_.size(); }
  Rational evaluate(std::span<const Rational> point) const;
  MultiPoly to_multipoly() const;
  QElem residue(const QuotientAlgebra& algebra) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

inline constexpr std::size_t kDefaultSearchBound = 64;

/// The k-th coefficient tried by the search: 1, -1, 2, -2, 3, ...
Rational search_candidate(std::size_t k);

/// Finds c so that g = x1 + c2 x2 + ... is injective on the root grid of the
/// generators, certified root-free: the values polynomial folded over the
/// squarefree parts, axis by axis, must stay squarefree. Coordinates are
/// fixed greedily left to right, each trying search_candidate(0..bound-1).
/// Throws NoPrimitiveElementError when two or more generators are
/// inseparable and SearchExhaustedError when a coordinate runs out.
LinearForm find_primitive_linear_form(const QuotientAlgebra& algebra,
                                      std::size_t bound = kDefaultSearchBound);

/// Monic least-degree polynomial annihilating e.
Poly min_poly_residue(const QElem& e);

}  // namespace primel
