#include "primel/multipoly.hpp"

#include <string>

#include "primel/error.hpp"

namespace primel {

MultiPoly::MultiPoly(std::size_t arity, const Terms& terms) : arity_(arity) {
  for (const auto& [exps, coef] : terms) add_term(exps, coef);
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
  MultiPoly out(arity);
  out.add_term(Exponents(arity, 0), c);
  return out;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw InputError("variable index out of range");
  Exponents e(arity, 0);
  e[index] = 1;
  MultiPoly out(arity);
  out.add_term(e, 1);
  return out;
}

MultiPoly MultiPoly::from_univariate(std::size_t arity, std::size_t index, const Poly& p) {
  if (index >= arity) throw InputError("variable index out of range");
  MultiPoly out(arity);
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    Exponents e(arity, 0);
    e[index] = static_cast<unsigned>(k);
    out.add_term(e, c[k]);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coef) {
  if (exps.size() != arity_) {
    throw InputError("term has " + std::to_string(exps.size()) + " exponents, expected " +
                     std::to_string(arity_));
  }
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw InputError("evaluation point has the wrong dimension");
  Rational acc;
  for (const auto& [exps, coef] : terms_) {
    Rational term = coef;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (exps[i] != 0) term *= point[i].pow(exps[i]);
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::partial(std::size_t var, unsigned order) const {
  if (var >= arity_) throw InputError("variable index out of range");
  if (order == 0) return *this;
  MultiPoly out(arity_);
  for (const auto& [exps, coef] : terms_) {
    if (exps[var] < order) continue;
    // falling factorial e (e-1) ... (e-order+1)
    long factor = 1;
    for (unsigned j = 0; j < order; ++j) factor *= static_cast<long>(exps[var] - j);
    Exponents e = exps;
    e[var] -= order;
    out.add_term(e, coef * Rational(factor));
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(arity_);
  for (const auto& [exps, coef] : terms_) out.add_term(exps, coef * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

void MultiPoly::check_same_arity(const MultiPoly& rhs) const {
  if (arity_ != rhs.arity_) throw InputError("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_same_arity(rhs);
  for (const auto& [exps, coef] : rhs.terms_) add_term(exps, coef);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_same_arity(rhs);
  for (const auto& [exps, coef] : rhs.terms_) add_term(exps, -coef);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.check_same_arity(rhs);
  MultiPoly out(lhs.arity_);
  Exponents e(lhs.arity_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly compose(const Poly& outer, const MultiPoly& inner) {
  MultiPoly acc(inner.arity());
  const auto& c = outer.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * inner;
    acc += MultiPoly::constant(inner.arity(), c[k]);
  }
  return acc;
}

}  // namespace primel
