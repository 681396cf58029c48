#include "primel/linear_dependence.hpp"

#include "primel/error.hpp"

namespace primel {

std::optional<std::vector<Rational>> LinearDependenceTracker::add(const std::vector<Rational>& v) {
  if (v.size() != dimension_) throw InputError("vector has the wrong dimension");
  const std::size_t accepted = rows_.size();
  std::vector<Rational> work = v;
  // v = work + sum_k factor_k * rows_k
  std::vector<Rational> expression(accepted);
  for (std::size_t k = 0; k < accepted; ++k) {
    const Rational& entry = work[pivots_[k]];
    if (entry.is_zero()) continue;
    const Rational factor = entry / rows_[k][pivots_[k]];
    for (std::size_t c = 0; c < dimension_; ++c) {
      if (!rows_[k][c].is_zero()) work[c] -= factor * rows_[k][c];
    }
    for (std::size_t j = 0; j < combos_[k].size(); ++j) {
      if (!combos_[k][j].is_zero()) expression[j] += factor * combos_[k][j];
    }
  }
  std::size_t pivot = 0;
  while (pivot < dimension_ && work[pivot].is_zero()) ++pivot;
  if (pivot == dimension_) return expression;

  std::vector<Rational> combo(accepted + 1);
  for (std::size_t j = 0; j < accepted; ++j) combo[j] = -expression[j];
  combo[accepted] = 1;
  for (auto& c : combos_) c.resize(accepted + 1);
  rows_.push_back(std::move(work));
  pivots_.push_back(pivot);
  combos_.push_back(std::move(combo));
  return std::nullopt;
}

}  // namespace primel
