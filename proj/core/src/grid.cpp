#include "primel/grid.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "primel/error.hpp"

namespace primel {

unsigned GridPoint::local_exponent() const {
  unsigned sum = 0;
  for (unsigned m : multiplicities) sum += m;
  return sum + 1 - static_cast<unsigned>(multiplicities.size());
}

GridSpec::GridSpec(std::vector<std::vector<GridRoot>> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw InputError("grid needs at least one axis");
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    const auto& axis = axes_[i];
    if (axis.empty()) throw InputError("grid axis " + std::to_string(i + 1) + " is empty");
    std::set<Rational> seen;
    for (const auto& r : axis) {
      if (r.multiplicity == 0) throw InputError("grid multiplicities must be >= 1");
      if (!seen.insert(r.root).second) {
        throw InputError("repeated root " + r.root.to_string() + " on grid axis " +
                         std::to_string(i + 1));
      }
    }
  }
}

std::size_t GridSpec::point_count() const {
  std::size_t count = 1;
  for (const auto& axis : axes_) count *= axis.size();
  return count;
}

Poly GridSpec::axis_polynomial(std::size_t axis) const {
  const auto names = default_variable_names(axes_.size());
  Poly out = Poly::constant(1, names.at(axis));
  for (const auto& r : axes_.at(axis)) out *= Poly::linear(r.root, names[axis]).pow(r.multiplicity);
  return out;
}

QuotientAlgebra GridSpec::algebra() const {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < axes_.size(); ++i) gens.push_back(axis_polynomial(i));
  return QuotientAlgebra(std::move(gens));
}

void GridSpec::for_each_point(const std::function<void(const GridPoint&)>& visit) const {
  const std::size_t n = axes_.size();
  std::vector<std::size_t> idx(n, 0);
  GridPoint point{std::vector<Rational>(n), std::vector<unsigned>(n)};
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      point.coordinates[i] = axes_[i][idx[i]].root;
      point.multiplicities[i] = axes_[i][idx[i]].multiplicity;
    }
    visit(point);
    std::size_t i = 0;
    while (i < n && ++idx[i] == axes_[i].size()) idx[i++] = 0;
    if (i == n) return;
  }
}

Poly min_poly_of_injective_form(const GridSpec& grid, const LinearForm& form) {
  if (form.arity() != grid.arity()) throw InputError("linear form and grid differ in arity");
  std::set<Rational> values;
  Poly out = Poly::constant(1, "t");
  grid.for_each_point([&](const GridPoint& a) {
    const Rational value = form.evaluate(a.coordinates);
    if (!values.insert(value).second) {
      throw ContractViolation("linear form is not injective on the grid: value " +
                              value.to_string() + " repeats");
    }
    out *= Poly::linear(value, "t").pow(a.local_exponent());
  });
  return out;
}

bool hermite_membership(const MultiPoly& p, const GridSpec& grid) {
  if (p.arity() != grid.arity()) throw InputError("polynomial and grid differ in arity");
  const std::size_t n = grid.arity();
  bool member = true;
  grid.for_each_point([&](const GridPoint& a) {
    if (!member) return;
    std::vector<unsigned> order(n, 0);
    for (;;) {
      MultiPoly d = p;
      for (std::size_t i = 0; i < n; ++i) d = d.partial(i, order[i]);
      if (!d.evaluate(a.coordinates).is_zero()) {
        member = false;
        return;
      }
      std::size_t i = 0;
      while (i < n && ++order[i] == a.multiplicities[i]) order[i++] = 0;
      if (i == n) return;
    }
  });
  return member;
}

Poly build_annihilator(const MultiPoly& p, const GridSpec& grid) {
  if (p.arity() != grid.arity()) throw InputError("polynomial and grid differ in arity");
  Poly out = Poly::constant(1, "t");
  grid.for_each_point([&](const GridPoint& a) {
    out *= Poly::linear(p.evaluate(a.coordinates), "t").pow(a.local_exponent());
  });
  return out;
}

}  // namespace primel
