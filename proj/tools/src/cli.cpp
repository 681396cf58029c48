#include "primel_tools/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "primel/engine.hpp"
#include "primel/error.hpp"
#include "primel/generators.hpp"
#include "primel/grid.hpp"
#include "primel/json_io.hpp"
#include "primel/quotient.hpp"
#include "primel/subalgebra.hpp"

namespace primel::cli {
namespace {

using json::Json;

struct Config {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t bound = kDefaultSearchBound;
  std::string format = "json";
  std::string input = "-";
};

Json read_input(const Config& cfg, std::istream& in) {
  std::string text;
  if (cfg.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw InputError("cannot open input file '" + cfg.input + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  return j.at(key);
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::kConstructed: return kExitOk;
    case Verdict::kNegativeInSpan: return kExitNegativeInSpan;
    case Verdict::kNegativeAbsolute: return kExitNegativeAbsolute;
    case Verdict::kNegativeAbsoluteProbabilistic: return kExitNegativeProbabilistic;
    case Verdict::kUnknown: return kExitUnknown;
  }
  return kExitUnknown;
}

void print_text_report(const AnalysisReport& r, std::ostream& out) {
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "matrices: " << r.matrix_count << " of size " << r.size
      << (r.commuting ? ", commuting" : ", not commuting") << "\n";
  for (std::size_t i = 0; i < r.minimal_polynomials.size(); ++i) {
    out << "  mu_" << i + 1 << " = " << r.minimal_polynomials[i]
        << (r.separable[i] ? "" : "  (inseparable)") << "\n";
  }
  if (r.construction) {
    const auto& c = *r.construction;
    out << "source (" << to_string(c.method) << "), coefficients:";
    for (const auto& v : c.linear_form) out << " " << v;
    out << "\n";
    for (std::size_t i = 0; i < c.polynomials.size(); ++i) {
      out << "  A_" << i + 1 << " = " << c.polynomials[i] << " at C\n";
    }
  }
  if (r.negative) {
    const auto& n = *r.negative;
    out << "deg mu_A * deg mu_B = " << n.degree_a << " * " << n.degree_b << " = "
        << n.degree_a * n.degree_b << ", dim Q[A,B] = " << n.span_dimension << ", n = " << n.size << "\n";
  }
  if (r.evidence) {
    out << "dim Q[A_1..A_m] = " << r.evidence->span_dimension << ", max sampled codim = "
        << r.evidence->observed_codim << " over " << r.evidence->trials << " trials (seed "
        << r.evidence->seed << ")\n";
  }
  if (!r.reason.empty()) out << "reason: " << r.reason << "\n";
}

void emit(const Json& j, const Config& cfg, std::ostream& out) {
  if (cfg.format == "text") {
    for (const auto& [key, value] : j.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  } else {
    out << j.dump() << "\n";
  }
}

int cmd_analyze(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto ms = json::matrices_from_json(read_input(cfg, in));
  const AnalysisReport report = analyze(ms, AnalysisOptions{cfg.trials, cfg.seed, cfg.bound});
  if (cfg.format == "text") {
    print_text_report(report, out);
  } else {
    out << json::to_json(report).dump() << "\n";
  }
  return verdict_exit_code(report.verdict);
}

int cmd_quotient(const std::string& sub, const Config& cfg, std::istream& in, std::ostream& out) {
  const Json input = read_input(cfg, in);
  Json result;
  if (sub == "dim" || sub == "codim" || sub == "primitive") {
    const QuotientAlgebra alg = json::algebra_from_json(input);
    if (sub == "dim") {
      result["dim"] = dim_quotient(alg);
    } else if (sub == "codim") {
      result["codim"] = codim_quotient(alg);
    } else {
      const bool primitive = has_primitive_element(alg);
      result["primitive"] = primitive;
      if (primitive) result["linear_form"] = json::to_json(find_primitive_linear_form(alg, cfg.bound));
    }
  } else {
    const GridSpec grid = json::grid_from_json(require_key(input, "grid"));
    const MultiPoly p = json::multipoly_from_json(require_key(input, "poly"), grid.arity());
    if (sub == "member") {
      result["member"] = hermite_membership(p, grid);
    } else {
      const Poly f = build_annihilator(p, grid);
      result["annihilator"] = json::to_json(f);
      result["degree"] = f.degree();
    }
  }
  emit(result, cfg, out);
  return kExitOk;
}

int cmd_generate(const std::string& kind, const Config& cfg, std::istream& in, std::ostream& out) {
  Json result;
  if (kind == "frobenius") {
    const auto [a, b] = frobenius_pair();
    result = json::matrices_to_json({a, b});
  } else {
    const CounterexampleSpec spec = json::counterexample_from_json(read_input(cfg, in));
    auto [a, b] = rho_pair(spec);
    if (spec.seed()) {
      const auto moved = random_conjugate(a, b, *spec.seed());
      result = json::matrices_to_json({moved.a, moved.b});
      result["conjugator"] = json::to_json(moved.s);
    } else {
      result = json::matrices_to_json({a, b});
    }
  }
  out << result.dump() << "\n";
  return kExitOk;
}

struct SelfCheck {
  const char* name;
  std::function<bool()> run;
};

int cmd_selftest(std::ostream& out) {
  const Poly f = Poly::from_integers({2, -3, 0, 1});
  const Poly g = Poly::from_integers({1, 2, 1}, "y");
  const std::vector<SelfCheck> checks{
      {"block pair matches the reference 6x6 matrices",
       [&] {
         const auto [a, b] = rho_pair(CounterexampleSpec(f, g));
         return a == Matrix::from_rows({{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {-2, 3, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, -2, 3, 0}}) &&
                b == Matrix::from_rows({{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
                                        {-1, 0, 0, -2, 0, 0}, {0, -1, 0, 0, -2, 0}, {0, 0, -1, 0, 0, -2}});
       }},
      {"block pair is an absolute negative",
       [&] {
         const auto [a, b] = rho_pair(CounterexampleSpec(f, g));
         return analyze(std::vector<Matrix>{a, b}).verdict == Verdict::kNegativeAbsolute;
       }},
      {"frobenius pair spans dimension 3",
       [] {
         const auto [a, b] = frobenius_pair();
         return span_dimension(std::vector<Matrix>{a, b}) == 3;
       }},
      {"frobenius pair is a probabilistic negative",
       [] {
         const auto [a, b] = frobenius_pair();
         const auto r = analyze(std::vector<Matrix>{a, b});
         return r.verdict == Verdict::kNegativeAbsoluteProbabilistic && r.evidence->observed_codim == 2;
       }},
      {"quotient dimension is 6 and codimension 5",
       [&] {
         const QuotientAlgebra alg({f, g});
         return dim_quotient(alg) == 6 && codim_quotient(alg) == 5 && !has_primitive_element(alg);
       }},
      {"commuting diagonal pair is constructed",
       [] {
         const std::vector<Rational> d1{1, 2};
         const std::vector<Rational> d2{3, 3};
         const std::vector<Matrix> ms{Matrix::diagonal(d1), Matrix::diagonal(d2)};
         const auto r = analyze(ms);
         return r.verdict == Verdict::kConstructed && replay(*r.construction, ms);
       }},
  };
  bool all = true;
  for (const auto& check : checks) {
    bool ok = false;
    try {
      ok = check.run();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "PASS " : "FAIL ") << check.name << "\n";
    all = all && ok;
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Primitive elements and common source matrices over Q", "primel"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* cmd, bool takes_input) {
    const auto at_least_one = CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max());
    cmd->add_option("--trials", cfg.trials, "Monte-Carlo trials")->check(at_least_one);
    cmd->add_option("--seed", cfg.seed, "Random seed");
    cmd->add_option("--bound", cfg.bound, "Candidates per coefficient")->check(at_least_one);
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    if (takes_input) cmd->add_option("input", cfg.input, "Input JSON file, or - for stdin");
  };

  std::function<int()> action;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide whether a common source matrix exists");
  add_common(analyze_cmd, true);
  analyze_cmd->callback([&] { action = [&] { return cmd_analyze(cfg, in, out); }; });

  auto* quotient_cmd = app.add_subcommand("quotient", "Operations on Q[x1..xn]/(f1(x1),...,fn(xn))");
  quotient_cmd->require_subcommand(1);
  for (const char* sub : {"dim", "codim", "primitive", "member", "annihilator"}) {
    auto* cmd = quotient_cmd->add_subcommand(sub);
    add_common(cmd, true);
    const std::string name = sub;
    cmd->callback([&, name] { action = [&, name] { return cmd_quotient(name, cfg, in, out); }; });
  }

  auto* generate_cmd = app.add_subcommand("generate", "Emit fixture matrix pairs");
  generate_cmd->require_subcommand(1);
  auto* counter_cmd = generate_cmd->add_subcommand("counterexample", "Block pair from {f, g, seed?}");
  add_common(counter_cmd, true);
  counter_cmd->callback([&] { action = [&] { return cmd_generate("counterexample", cfg, in, out); }; });
  auto* frob_cmd = generate_cmd->add_subcommand("frobenius", "The 3x3 pair E12, E13");
  add_common(frob_cmd, false);
  frob_cmd->callback([&] { action = [&] { return cmd_generate("frobenius", cfg, in, out); }; });

  auto* self_cmd = app.add_subcommand("selftest", "Check the built-in fixtures");
  self_cmd->callback([&] { action = [&] { return cmd_selftest(out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DegenerateInputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidCoefficientError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace primel::cli
