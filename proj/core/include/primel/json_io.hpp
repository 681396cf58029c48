#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "primel/engine.hpp"
#include "primel/generators.hpp"
#include "primel/grid.hpp"
#include "primel/matrix.hpp"
#include "primel/multipoly.hpp"
#include "primel/poly.hpp"
#include "primel/quotient.hpp"
#include "primel/rational.hpp"

// Wire formats. Rationals travel as strings ("p/q" or integer literals);
// integer JSON numbers are also accepted on input. Every reader throws
// InputError on malformed data.
namespace primel::json {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// ["2","-3","0","1"] for x^3 - 3x + 2.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, const std::string& variable = "x");

/// {"rows":r,"cols":c,"entries":[["0","1"],...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Either {"matrices":[...]} (extra keys ignored) or a bare array.
std::vector<Matrix> matrices_from_json(const Json& j);
Json matrices_to_json(const std::vector<Matrix>& ms);

/// {"axes":[[{"root":"1","mult":2},...],...]}
Json to_json(const GridSpec& g);
GridSpec grid_from_json(const Json& j);

/// [{"exps":[i,j,...],"coef":"p/q"},...]
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j, std::size_t arity);

/// {"generators":[<poly>...],"vars":["x","y"]}
Json to_json(const QuotientAlgebra& a);
QuotientAlgebra algebra_from_json(const Json& j);

Json to_json(const LinearForm& form);

/// {"f":[...],"g":[...],"seed":123}; seed optional.
Json to_json(const CounterexampleSpec& spec);
CounterexampleSpec counterexample_from_json(const Json& j);

/// Stable key order; identical reports serialize to identical bytes.
Json to_json(const AnalysisReport& report);

}  // namespace primel::json
