#include "primel/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "primel/error.hpp"

namespace primel {

namespace {

// Fraction-free Gaussian elimination. `exact_div` must divide exactly; the
// Bareiss invariant guarantees it does for any integral domain.
template <class T, class ExactDiv, class IsZero>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one, const T& zero,
                      ExactDiv exact_div, IsZero is_zero) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return zero;
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T numerator = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(numerator, previous);
      }
    }
    previous = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

Integer lcm_of_denominators(const Poly& f) {
  Integer out = 1;
  for (const auto& c : f.coefficients()) {
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), c.denominator().get_mpz_t());
  }
  return out;
}

std::vector<Integer> integer_coefficients(const Poly& f, const Integer& scale) {
  std::vector<Integer> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    Integer v = c.numerator() * (scale / c.denominator());
    out.push_back(std::move(v));
  }
  return out;
}

void require_nonconstant(const Poly& f, const char* what) {
  if (f.degree() < 1) {
    throw DegenerateInputError(std::string(what) + ": polynomial must have degree >= 1, got " +
                               (f.is_zero() ? std::string("0") : f.to_string()));
  }
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs, std::string variable)
    : coeffs_(std::move(coeffs)), variable_(std::move(variable)) {
  trim();
}

Poly Poly::constant(const Rational& c, std::string variable) {
  return Poly(std::vector<Rational>{c}, std::move(variable));
}

Poly Poly::monomial(const Rational& c, std::size_t degree, std::string variable) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs), std::move(variable));
}

Poly Poly::linear(const Rational& root, std::string variable) {
  return Poly(std::vector<Rational>{-root, Rational(1)}, std::move(variable));
}

Poly Poly::from_integers(std::initializer_list<long> coeffs, std::string variable) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.emplace_back(c);
  return Poly(std::move(out), std::move(variable));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw DegenerateInputError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::with_variable(std::string variable) const {
  Poly out = *this;
  out.variable_ = std::move(variable);
  return out;
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::monic() const {
  if (coeffs_.empty() || coeffs_.back().is_one()) return *this;
  return scaled(coeffs_.back().inverse());
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = Poly::constant(1, variable_);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out = *this;
  for (auto& coeff : out.coeffs_) coeff *= c;
  out.trim();
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (is_constant() && !rhs.is_constant()) variable_ = rhs.variable_;
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (is_constant() && !rhs.is_constant()) variable_ = rhs.variable_;
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_constant() && !rhs.is_constant()) variable_ = rhs.variable_;
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag.is_one();
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << variable_;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

PolyDivision divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DegenerateInputError("polynomial division by zero");
  const auto& d = divisor.coefficients();
  std::vector<Rational> rem = dividend.coefficients();
  if (rem.size() < d.size()) return {Poly({}, dividend.variable()), dividend};
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  const Rational lead_inv = d.back().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + d.size() - 1] * lead_inv;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= factor * d[j];
  }
  rem.resize(d.size() - 1);
  return {Poly(std::move(quot), dividend.variable()), Poly(std::move(rem), dividend.variable())};
}

bool divides(const Poly& divisor, const Poly& dividend) {
  return divmod(dividend, divisor).remainder.is_zero();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  Poly a = f.monic();
  Poly b = g.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly derivative(const Poly& f) {
  const auto& c = f.coefficients();
  if (c.size() <= 1) return Poly({}, f.variable());
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * Rational(static_cast<long>(k));
  return Poly(std::move(out), f.variable());
}

bool is_separable(const Poly& f) {
  require_nonconstant(f, "is_separable");
  return poly_gcd(f, derivative(f)).degree() == 0;
}

Poly squarefree_part(const Poly& f) {
  require_nonconstant(f, "squarefree_part");
  const Poly g = poly_gcd(f, derivative(f));
  return divmod(f, g).quotient.monic();
}

Rational resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw DegenerateInputError("resultant of the zero polynomial");
  const auto df = static_cast<std::size_t>(f.degree());
  const auto dg = static_cast<std::size_t>(g.degree());
  if (df == 0) return f.leading().pow(static_cast<unsigned>(dg));
  if (dg == 0) return g.leading().pow(static_cast<unsigned>(df));

  const Integer scale_f = lcm_of_denominators(f);
  const Integer scale_g = lcm_of_denominators(g);
  const auto fi = integer_coefficients(f, scale_f);
  const auto gi = integer_coefficients(g, scale_g);

  const std::size_t n = df + dg;
  std::vector<std::vector<Integer>> sylvester(n, std::vector<Integer>(n, 0));
  for (std::size_t row = 0; row < dg; ++row) {
    for (std::size_t k = 0; k <= df; ++k) sylvester[row][row + k] = fi[df - k];
  }
  for (std::size_t row = 0; row < df; ++row) {
    for (std::size_t k = 0; k <= dg; ++k) sylvester[dg + row][row + k] = gi[dg - k];
  }
  const Integer det = bareiss_determinant<Integer>(
      std::move(sylvester), Integer(1), Integer(0),
      [](const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
      },
      [](const Integer& a) { return sgn(a) == 0; });

  // Res(sf*f, sg*g) = sf^dg * sg^df * Res(f, g)
  Integer denom;
  Integer tmp;
  mpz_pow_ui(denom.get_mpz_t(), scale_f.get_mpz_t(), dg);
  mpz_pow_ui(tmp.get_mpz_t(), scale_g.get_mpz_t(), df);
  denom *= tmp;
  return Rational(det, denom);
}

namespace {

// Elements of Q[t][y] / (g(y)) for monic g, stored as the y-coefficients.
using ResidueVec = std::vector<Poly>;

ResidueVec times_y(const ResidueVec& v, const Poly& monic_g) {
  const std::size_t dg = v.size();
  ResidueVec out(dg, Poly({}, "t"));
  for (std::size_t j = 0; j + 1 < dg; ++j) out[j + 1] = v[j];
  const Poly& top = v[dg - 1];
  if (!top.is_zero()) {
    for (std::size_t j = 0; j < dg; ++j) {
      const Rational& gj = monic_g.coefficients()[j];
      if (!gj.is_zero()) out[j] -= top.scaled(gj);
    }
  }
  return out;
}

}  // namespace

Poly values_poly(const Poly& f, const Poly& g, const Rational& c) {
  if (c.is_zero()) throw InvalidCoefficientError("values_poly: coefficient c must be nonzero");
  require_nonconstant(f, "values_poly");
  require_nonconstant(g, "values_poly");
  if (!is_separable(f) || !is_separable(g)) {
    throw ContractViolation("values_poly: inputs must be squarefree");
  }
  const Poly gm = g.monic();
  const auto dg = static_cast<std::size_t>(gm.degree());
  const Poly t = Poly::monomial(1, 1, "t");

  // F(t, y) = f(t - c*y) reduced modulo g(y), by Horner in (t - c*y).
  ResidueVec acc(dg, Poly({}, "t"));
  const auto& fc = f.coefficients();
  for (std::size_t k = fc.size(); k-- > 0;) {
    ResidueVec shifted = times_y(acc, gm);
    for (std::size_t j = 0; j < dg; ++j) {
      acc[j] = acc[j] * t - shifted[j].scaled(c);
    }
    acc[0] += Poly::constant(fc[k], "t");
  }

  // Multiplication-by-F matrix on the basis 1, y, ..., y^(dg-1); its
  // determinant is the norm prod_{g(b)=0} f(t - c*b).
  std::vector<std::vector<Poly>> m(dg, std::vector<Poly>(dg));
  ResidueVec column = acc;
  for (std::size_t j = 0; j < dg; ++j) {
    for (std::size_t r = 0; r < dg; ++r) m[r][j] = column[r];
    if (j + 1 < dg) column = times_y(column, gm);
  }
  const Poly det = bareiss_determinant<Poly>(
      std::move(m), Poly::constant(1, "t"), Poly({}, "t"),
      [](const Poly& a, const Poly& b) {
        auto qr = divmod(a, b);
        if (!qr.remainder.is_zero()) throw InternalError("values_poly: inexact Bareiss step");
        return qr.quotient;
      },
      [](const Poly& a) { return a.is_zero(); });
  return det.monic().with_variable("t");
}

}  // namespace primel
