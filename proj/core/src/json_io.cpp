#include "primel/json_io.hpp"

#include <utility>

#include "primel/error.hpp"

namespace primel::json {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t require_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational::parse(j.dump());
  throw InputError("expected a rational string or integer, got " + j.dump());
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const Json& j, const std::string& variable) {
  require_array(j, "polynomial");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs), variable);
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = require_size(require(j, "rows"), "rows");
  const std::size_t cols = require_size(require(j, "cols"), "cols");
  const Json& entries = require(j, "entries");
  require_array(entries, "entries");
  if (entries.size() != rows) throw InputError("entries has the wrong number of rows");
  std::vector<Rational> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    require_array(row, "matrix row");
    if (row.size() != cols) throw InputError("matrix row has the wrong number of columns");
    for (const auto& v : row) flat.push_back(rational_from_json(v));
  }
  return Matrix(rows, cols, std::move(flat));
}

std::vector<Matrix> matrices_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : require(j, "matrices");
  require_array(list, "matrices");
  std::vector<Matrix> out;
  for (const auto& m : list) out.push_back(matrix_from_json(m));
  if (out.empty()) throw InputError("no matrices given");
  return out;
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
  Json list = Json::array();
  for (const auto& m : ms) list.push_back(to_json(m));
  Json out;
  out["matrices"] = std::move(list);
  return out;
}

Json to_json(const GridSpec& g) {
  Json axes = Json::array();
  for (const auto& axis : g.axes()) {
    Json a = Json::array();
    for (const auto& r : axis) {
      Json entry;
      entry["root"] = to_json(r.root);
      entry["mult"] = r.multiplicity;
      a.push_back(std::move(entry));
    }
    axes.push_back(std::move(a));
  }
  Json out;
  out["axes"] = std::move(axes);
  return out;
}

GridSpec grid_from_json(const Json& j) {
  const Json& axes = require(j, "axes");
  require_array(axes, "axes");
  std::vector<std::vector<GridRoot>> out;
  for (const auto& axis : axes) {
    require_array(axis, "grid axis");
    std::vector<GridRoot> roots;
    for (const auto& r : axis) {
      roots.push_back(GridRoot{rational_from_json(require(r, "root")),
                               static_cast<unsigned>(require_size(require(r, "mult"), "mult"))});
    }
    out.push_back(std::move(roots));
  }
  return GridSpec(std::move(out));
}

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [exps, coef] : p.terms()) {
    Json term;
    term["exps"] = exps;
    term["coef"] = to_json(coef);
    out.push_back(std::move(term));
  }
  return out;
}

MultiPoly multipoly_from_json(const Json& j, std::size_t arity) {
  require_array(j, "polynomial terms");
  MultiPoly out(arity);
  for (const auto& term : j) {
    const Json& exps = require(term, "exps");
    require_array(exps, "exps");
    Exponents e;
    for (const auto& x : exps) e.push_back(static_cast<unsigned>(require_size(x, "exponent")));
    if (e.size() != arity) {
      throw InputError("term refers to " + std::to_string(e.size()) + " variables, expected " +
                       std::to_string(arity));
    }
    out.add_term(e, rational_from_json(require(term, "coef")));
  }
  return out;
}

Json to_json(const QuotientAlgebra& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators()) gens.push_back(to_json(g));
  Json out;
  out["generators"] = std::move(gens);
  out["vars"] = a.variables();
  return out;
}

QuotientAlgebra algebra_from_json(const Json& j) {
  const Json& gens = require(j, "generators");
  require_array(gens, "generators");
  std::vector<std::string> vars;
  if (j.contains("vars")) {
    require_array(j.at("vars"), "vars");
    for (const auto& v : j.at("vars")) {
      if (!v.is_string()) throw InputError("variable names must be strings");
      vars.push_back(v.get<std::string>());
    }
  }
  const auto names = vars.empty() ? default_variable_names(gens.size()) : vars;
  std::vector<Poly> polys;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    polys.push_back(poly_from_json(gens[i], i < names.size() ? names[i] : "x"));
  }
  return QuotientAlgebra(std::move(polys), std::move(vars));
}

Json to_json(const LinearForm& form) {
  Json out = Json::array();
  for (const auto& c : form.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const CounterexampleSpec& spec) {
  Json out;
  out["f"] = to_json(spec.f());
  out["g"] = to_json(spec.g());
  if (spec.seed()) out["seed"] = *spec.seed();
  return out;
}

CounterexampleSpec counterexample_from_json(const Json& j) {
  const Poly f = poly_from_json(require(j, "f"), "x");
  const Poly g = poly_from_json(require(j, "g"), "y");
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j.at("seed").is_null()) {
    seed = static_cast<std::uint64_t>(require_size(j.at("seed"), "seed"));
  }
  return CounterexampleSpec(f, g, seed);
}

Json to_json(const AnalysisReport& report) {
  Json out;
  out["verdict"] = std::string(to_string(report.verdict));

  Json input;
  input["matrix_count"] = report.matrix_count;
  input["size"] = report.size;
  input["commuting"] = report.commuting;
  Json minimal = Json::array();
  for (const auto& mu : report.minimal_polynomials) minimal.push_back(to_json(mu));
  input["minimal_polynomials"] = std::move(minimal);
  Json separable = Json::array();
  for (bool s : report.separable) separable.push_back(s);
  input["separable"] = std::move(separable);
  out["input"] = std::move(input);

  Json cert = Json::object();
  if (report.construction) {
    const auto& c = *report.construction;
    cert["method"] = std::string(to_string(c.method));
    Json form = Json::array();
    for (const auto& v : c.linear_form) form.push_back(to_json(v));
    cert["linear_form"] = std::move(form);
    cert["source"] = to_json(c.source);
    Json polys = Json::array();
    for (const auto& p : c.polynomials) polys.push_back(to_json(p));
    cert["polynomials"] = std::move(polys);
    cert["verified"] = true;
  } else if (report.negative) {
    const auto& n = *report.negative;
    cert["grounds"] = n.verdict == Verdict::kNegativeAbsolute
                          ? "both minimal polynomials inseparable and "
                            "deg(mu_A)*deg(mu_B) = dim Q[A,B] = n"
                          : "both minimal polynomials inseparable and "
                            "deg(mu_A)*deg(mu_B) = dim Q[A,B]";
    if (report.negative_pair) {
      cert["pair"] = Json::array({report.negative_pair->first, report.negative_pair->second});
    }
    cert["degree_mu_a"] = n.degree_a;
    cert["degree_mu_b"] = n.degree_b;
    cert["degree_product"] = n.degree_a * n.degree_b;
    cert["span_dimension"] = n.span_dimension;
    cert["size"] = n.size;
  } else if (report.evidence) {
    const auto& e = *report.evidence;
    cert["grounds"] = report.verdict == Verdict::kNegativeAbsoluteProbabilistic
                          ? "dim Q[A_1..A_m] = n and no sampled element reached codim = dim; "
                            "an algebra of dimension n without a primitive element admits no "
                            "common source"
                          : "sampled codim reached dim";
    cert["span_dimension"] = e.span_dimension;
    cert["observed_codim"] = e.observed_codim;
    cert["size"] = report.size;
  } else if (report.span_dimension) {
    cert["span_dimension"] = *report.span_dimension;
  }
  out["certificate"] = std::move(cert);

  if (report.randomness_used) {
    Json rnd;
    rnd["seed"] = report.options.seed;
    rnd["trials"] = report.options.trials;
    out["randomness"] = std::move(rnd);
  }
  out["reason"] = report.reason;
  return out;
}

}  // namespace primel::json
