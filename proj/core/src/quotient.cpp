#include "primel/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "primel/error.hpp"
#include "primel/linear_dependence.hpp"

namespace primel {

struct QuotientAlgebra::Impl {
  std::vector<Poly> generators;
  std::vector<Poly> monic;
  std::vector<std::string> variables;
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> strides;
  std::size_t size = 1;
  // wrap[i][e - d_i] = x_i^e mod f_i for d_i <= e <= 2 d_i - 2
  std::vector<std::vector<std::vector<Rational>>> wrap;
};

namespace {

// x * v mod monic f, with v given on 1, x, ..., x^(d-1).
std::vector<Rational> times_x(const std::vector<Rational>& v, const Poly& monic) {
  const std::size_t d = v.size();
  std::vector<Rational> out(d);
  for (std::size_t j = 0; j + 1 < d; ++j) out[j + 1] = v[j];
  const Rational& top = v[d - 1];
  if (!top.is_zero()) {
    for (std::size_t j = 0; j < d; ++j) out[j] -= top * monic.coefficients()[j];
  }
  return out;
}

// Dense tensor with mixed-radix shape, first axis fastest.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<Rational> data;
};

std::size_t product(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{1}, std::multiplies<>());
}

// Folds axis `axis` of t from length shape[axis] down to d using x^e mod f.
Tensor reduce_axis(const Tensor& t, std::size_t axis, std::size_t d,
                   const std::vector<std::vector<Rational>>& wrap) {
  if (t.shape[axis] <= d) return t;
  Tensor out;
  out.shape = t.shape;
  out.shape[axis] = d;
  out.data.assign(product(out.shape), Rational());
  std::size_t inner = 1;
  for (std::size_t i = 0; i < axis; ++i) inner *= t.shape[i];
  const std::size_t len = t.shape[axis];
  const std::size_t outer = t.data.size() / (inner * len);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t e = 0; e < len; ++e) {
      for (std::size_t in = 0; in < inner; ++in) {
        const Rational& value = t.data[(o * len + e) * inner + in];
        if (value.is_zero()) continue;
        if (e < d) {
          out.data[(o * d + e) * inner + in] += value;
          continue;
        }
        const auto& residue = wrap[e - d];
        for (std::size_t r = 0; r < d; ++r) {
          if (!residue[r].is_zero()) out.data[(o * d + r) * inner + in] += value * residue[r];
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> default_variable_names(std::size_t arity) {
  if (arity <= 3) {
    static const char* const kNames[] = {"x", "y", "z"};
    return std::vector<std::string>(kNames, kNames + arity);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arity; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

QuotientAlgebra::QuotientAlgebra(std::vector<Poly> generators, std::vector<std::string> variables) {
  if (generators.empty()) throw InputError("quotient algebra needs at least one generator");
  if (variables.empty()) variables = default_variable_names(generators.size());
  if (variables.size() != generators.size()) {
    throw InputError("expected " + std::to_string(generators.size()) + " variable names, got " +
                     std::to_string(variables.size()));
  }
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree() < 1) {
      throw DegenerateInputError("generator " + std::to_string(i + 1) + " must be nonconstant");
    }
    Poly g = generators[i].with_variable(variables[i]);
    impl->monic.push_back(g.monic());
    impl->degrees.push_back(static_cast<std::size_t>(g.degree()));
    impl->generators.push_back(std::move(g));
  }
  impl->variables = std::move(variables);
  for (std::size_t d : impl->degrees) {
    impl->strides.push_back(impl->size);
    impl->size *= d;
  }
  for (std::size_t i = 0; i < impl->degrees.size(); ++i) {
    const std::size_t d = impl->degrees[i];
    std::vector<std::vector<Rational>> table;
    std::vector<Rational> current(d);
    current[d - 1] = 1;  // x^(d-1)
    for (std::size_t e = d; e + 1 < 2 * d; ++e) {
      current = times_x(current, impl->monic[i]);
      table.push_back(current);
    }
    impl->wrap.push_back(std::move(table));
  }
  impl_ = std::move(impl);
}

std::size_t QuotientAlgebra::arity() const { return impl_->generators.size(); }
const std::vector<Poly>& QuotientAlgebra::generators() const { return impl_->generators; }
const std::vector<std::string>& QuotientAlgebra::variables() const { return impl_->variables; }
const std::vector<std::size_t>& QuotientAlgebra::degrees() const { return impl_->degrees; }
std::size_t QuotientAlgebra::basis_size() const { return impl_->size; }

std::vector<Exponents> QuotientAlgebra::basis_monomials() const {
  std::vector<Exponents> out;
  out.reserve(impl_->size);
  for (std::size_t k = 0; k < impl_->size; ++k) out.push_back(exponents_of(k));
  return out;
}

std::size_t QuotientAlgebra::index_of(const Exponents& exps) const {
  if (exps.size() != arity()) throw InputError("exponent vector has the wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] >= impl_->degrees[i]) throw InputError("exponent outside the basis box");
    idx += exps[i] * impl_->strides[i];
  }
  return idx;
}

Exponents QuotientAlgebra::exponents_of(std::size_t index) const {
  Exponents out(arity());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<unsigned>(index % impl_->degrees[i]);
    index /= impl_->degrees[i];
  }
  return out;
}

std::vector<Rational> QuotientAlgebra::power_residue(std::size_t axis, unsigned exponent) const {
  const std::size_t d = impl_->degrees.at(axis);
  std::vector<Rational> v(d);
  if (exponent < d) {
    v[exponent] = 1;
    return v;
  }
  if (exponent + 1 < 2 * d) return impl_->wrap[axis][exponent - d];
  v = impl_->wrap[axis].empty() ? std::vector<Rational>(d) : impl_->wrap[axis].back();
  std::size_t e = 2 * d - 2;
  if (impl_->wrap[axis].empty()) {  // d == 1: x = -f_0
    v[0] = -impl_->monic[axis].coefficients()[0];
    e = 1;
  }
  for (; e < exponent; ++e) v = times_x(v, impl_->monic[axis]);
  return v;
}

bool operator==(const QuotientAlgebra& lhs, const QuotientAlgebra& rhs) {
  if (lhs.impl_ == rhs.impl_) return true;
  return lhs.impl_->monic == rhs.impl_->monic;
}

// ---------------------------------------------------------------------------

QElem::QElem(QuotientAlgebra algebra, std::vector<Rational> coordinates)
    : algebra_(std::move(algebra)), coords_(std::move(coordinates)) {
  if (coords_.size() != algebra_.basis_size()) {
    throw InputError("coordinate vector does not match the algebra's basis size");
  }
}

QElem QElem::zero(const QuotientAlgebra& algebra) {
  return QElem(algebra, std::vector<Rational>(algebra.basis_size()));
}

QElem QElem::constant(const QuotientAlgebra& algebra, const Rational& c) {
  std::vector<Rational> v(algebra.basis_size());
  v[0] = c;
  return QElem(algebra, std::move(v));
}

QElem QElem::variable(const QuotientAlgebra& algebra, std::size_t index) {
  return normal_form(MultiPoly::variable(algebra.arity(), index), algebra);
}

Rational QElem::coefficient(const Exponents& exps) const { return coords_[algebra_.index_of(exps)]; }

std::map<Exponents, Rational> QElem::terms() const {
  std::map<Exponents, Rational> out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!coords_[k].is_zero()) out.emplace(algebra_.exponents_of(k), coords_[k]);
  }
  return out;
}

bool QElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

void QElem::check_same_algebra(const QElem& rhs) const {
  if (!(algebra_ == rhs.algebra_)) throw InputError("elements of different quotient algebras");
}

QElem& QElem::operator+=(const QElem& rhs) {
  check_same_algebra(rhs);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

QElem& QElem::operator-=(const QElem& rhs) {
  check_same_algebra(rhs);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

QElem operator*(const QElem& lhs, const QElem& rhs) {
  lhs.check_same_algebra(rhs);
  const auto& impl = *lhs.algebra_.impl_;
  const std::size_t n = impl.degrees.size();

  Tensor box;
  std::vector<std::size_t> box_strides(n);
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    box.shape.push_back(2 * impl.degrees[i] - 1);
    box_strides[i] = size;
    size *= box.shape[i];
  }
  box.data.assign(size, Rational());

  std::vector<std::size_t> nonzero_a;
  std::vector<std::size_t> nonzero_b;
  for (std::size_t k = 0; k < lhs.coords_.size(); ++k) {
    if (!lhs.coords_[k].is_zero()) nonzero_a.push_back(k);
    if (!rhs.coords_[k].is_zero()) nonzero_b.push_back(k);
  }
  // basis index -> box index, computed per axis
  auto to_box = [&](std::size_t idx) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      out += (idx % impl.degrees[i]) * box_strides[i];
      idx /= impl.degrees[i];
    }
    return out;
  };
  std::vector<std::size_t> box_b;
  box_b.reserve(nonzero_b.size());
  for (std::size_t kb : nonzero_b) box_b.push_back(to_box(kb));
  for (std::size_t ka : nonzero_a) {
    const std::size_t ba = to_box(ka);
    const Rational& va = lhs.coords_[ka];
    for (std::size_t j = 0; j < nonzero_b.size(); ++j) {
      box.data[ba + box_b[j]] += va * rhs.coords_[nonzero_b[j]];
    }
  }
  for (std::size_t i = 0; i < n; ++i) box = reduce_axis(box, i, impl.degrees[i], impl.wrap[i]);
  return QElem(lhs.algebra_, std::move(box.data));
}

QElem QElem::operator-() const { return scaled(-1); }

QElem QElem::scaled(const Rational& c) const {
  QElem out = *this;
  for (auto& v : out.coords_) v *= c;
  return out;
}

QElem QElem::pow(unsigned exponent) const {
  QElem result = constant(algebra_, 1);
  QElem base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const QElem& lhs, const QElem& rhs) {
  return lhs.algebra_ == rhs.algebra_ && lhs.coords_ == rhs.coords_;
}

QElem q_add(const QElem& a, const QElem& b) { return a + b; }
QElem q_mul(const QElem& a, const QElem& b) { return a * b; }
QElem q_scale(const Rational& c, const QElem& a) { return a.scaled(c); }

QElem normal_form(const MultiPoly& p, const QuotientAlgebra& algebra) {
  const std::size_t n = algebra.arity();
  if (p.arity() != n) {
    throw InputError("polynomial uses " + std::to_string(p.arity()) +
                     " variables, algebra has " + std::to_string(n));
  }
  const auto& degrees = algebra.degrees();
  std::vector<std::map<unsigned, std::vector<Rational>>> cache(n);
  auto residue = [&](std::size_t axis, unsigned e) -> const std::vector<Rational>& {
    auto it = cache[axis].find(e);
    if (it == cache[axis].end()) it = cache[axis].emplace(e, algebra.power_residue(axis, e)).first;
    return it->second;
  };

  std::vector<Rational> coords(algebra.basis_size());
  std::vector<const std::vector<Rational>*> factors(n);
  for (const auto& [exps, coef] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) factors[i] = &residue(i, exps[i]);
    // Accumulate coef * (tensor product of per-axis residues).
    std::vector<std::pair<std::size_t, Rational>> partial{{0, coef}};
    std::size_t stride = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<std::size_t, Rational>> next;
      for (const auto& [idx, value] : partial) {
        for (std::size_t r = 0; r < degrees[i]; ++r) {
          const Rational& f = (*factors[i])[r];
          if (!f.is_zero()) next.emplace_back(idx + r * stride, value * f);
        }
      }
      partial = std::move(next);
      stride *= degrees[i];
    }
    for (const auto& [idx, value] : partial) coords[idx] += value;
  }
  return QElem(algebra, std::move(coords));
}

QElem evaluate(const Poly& p, const QElem& e) {
  QElem acc = QElem::zero(e.algebra());
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * e;
    acc += QElem::constant(e.algebra(), c[k]);
  }
  return acc;
}

MultiPoly lift(const QElem& e) {
  MultiPoly out(e.algebra().arity());
  for (const auto& [exps, coef] : e.terms()) out.add_term(exps, coef);
  return out;
}

std::size_t dim_quotient(const QuotientAlgebra& algebra) {
  return product(algebra.degrees());
}

std::size_t codim_quotient(const QuotientAlgebra& algebra) {
  const auto& gens = algebra.generators();
  const std::size_t n = gens.size();
  std::vector<std::size_t> sq;
  sq.reserve(n);
  for (const auto& g : gens) sq.push_back(static_cast<std::size_t>(squarefree_part(g).degree()));
  const std::size_t all = product(sq);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += algebra.degrees()[i] * (all / sq[i]);
  return total - (n - 1) * all;
}

bool has_primitive_element(const QuotientAlgebra& algebra) {
  const auto& gens = algebra.generators();
  const auto inseparable =
      std::count_if(gens.begin(), gens.end(), [](const Poly& g) { return !is_separable(g); });
  return inseparable <= 1;
}

bool has_primitive_element_by_codim(const QuotientAlgebra& algebra) {
  return codim_quotient(algebra) == dim_quotient(algebra);
}

bool sum_product_identity(std::span<const Rational> ks) {
  Rational sum;
  Rational prod = 1;
  for (const auto& k : ks) {
    if (k < Rational(1)) throw InputError("every k_i must be >= 1, got " + k.to_string());
    sum += k;
    prod *= k;
  }
  const Rational n(static_cast<long>(ks.size()));
  return sum - (n - 1) == prod;
}

LinearForm::LinearForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw InputError("linear form needs at least one coefficient");
  if (!coeffs_[0].is_one()) throw InputError("linear form must have leading coefficient 1");
  for (const auto& c : coeffs_) {
    if (c.is_zero()) throw InvalidCoefficientError("linear form coefficients must be nonzero");
  }
}

Rational LinearForm::evaluate(std::span<const Rational> point) const {
  if (point.size() != coeffs_.size()) throw InputError("point has the wrong dimension");
  Rational acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * point[i];
  return acc;
}

MultiPoly LinearForm::to_multipoly() const {
  MultiPoly out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out += MultiPoly::variable(coeffs_.size(), i).scaled(coeffs_[i]);
  }
  return out;
}

QElem LinearForm::residue(const QuotientAlgebra& algebra) const {
  return normal_form(to_multipoly(), algebra);
}

Rational search_candidate(std::size_t k) {
  const long magnitude = static_cast<long>(k / 2 + 1);
  return Rational(k % 2 == 0 ? magnitude : -magnitude);
}

LinearForm find_primitive_linear_form(const QuotientAlgebra& algebra, std::size_t bound) {
  if (!has_primitive_element(algebra)) {
    throw NoPrimitiveElementError("two or more generators are inseparable; no primitive element");
  }
  if (bound == 0) throw InputError("search bound must be at least 1");
  const auto& gens = algebra.generators();
  std::vector<Rational> coeffs{Rational(1)};
  Poly folded = squarefree_part(gens[0]);
  std::size_t expected_degree = static_cast<std::size_t>(folded.degree());
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const Poly axis = squarefree_part(gens[i]);
    expected_degree *= static_cast<std::size_t>(axis.degree());
    bool found = false;
    for (std::size_t k = 0; k < bound && !found; ++k) {
      const Rational c = search_candidate(k);
      Poly candidate = values_poly(folded, axis, c);
      if (is_separable(candidate)) {
        coeffs.push_back(c);
        folded = std::move(candidate);
        found = true;
      }
    }
    if (!found) {
      throw SearchExhaustedError("no injective coefficient for variable " + std::to_string(i + 1) +
                                 " among the first " + std::to_string(bound) + " candidates");
    }
  }
  if (static_cast<std::size_t>(folded.degree()) != expected_degree || !is_separable(folded)) {
    throw InternalError("folded values polynomial failed its final certification");
  }
  return LinearForm(std::move(coeffs));
}

Poly min_poly_residue(const QElem& e) {
  const QElem one = QElem::constant(e.algebra(), 1);
  return krylov_minimal_polynomial(one.coordinates(), [&](const std::vector<Rational>& v) {
    return (QElem(e.algebra(), v) * e).coordinates();
  });
}

}  // namespace primel
