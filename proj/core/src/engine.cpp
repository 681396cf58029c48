#include "primel/engine.hpp"

#include <algorithm>
#include <string>

#include "primel/error.hpp"
#include "primel/subalgebra.hpp"

namespace primel {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kConstructed: return "CONSTRUCTED";
    case Verdict::kNegativeInSpan: return "NEGATIVE_IN_SPAN";
    case Verdict::kNegativeAbsolute: return "NEGATIVE_ABSOLUTE";
    case Verdict::kNegativeAbsoluteProbabilistic: return "NEGATIVE_ABSOLUTE_PROBABILISTIC";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view to_string(ConstructionMethod m) {
  switch (m) {
    case ConstructionMethod::kCyclicMember: return "cyclic-member";
    case ConstructionMethod::kLinearForm: return "linear-form";
  }
  return "linear-form";
}

namespace {

std::size_t degree_of(const Poly& p) { return static_cast<std::size_t>(p.degree()); }

std::optional<CommonSource> try_cyclic_member(std::span<const Matrix> ms,
                                              const std::vector<Poly>& minimal) {
  const std::size_t n = ms.front().rows();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (degree_of(minimal[i]) != n) continue;
    CommonSource out;
    out.method = ConstructionMethod::kCyclicMember;
    out.linear_form.assign(ms.size(), Rational());
    out.linear_form[i] = 1;
    out.source = ms[i];
    bool all = true;
    for (const auto& m : ms) {
      auto p = express_as_polynomial(m, ms[i]);
      if (!p) {
        all = false;
        break;
      }
      out.polynomials.push_back(std::move(*p));
    }
    if (all) return out;
  }
  return std::nullopt;
}

// Greedy left-to-right: C_k = C_{k-1} + c_k A_k, with c_k the first
// candidate for which C_k generates all of Q[A_1, ..., A_k].
CommonSource linear_form_source(std::span<const Matrix> ms, std::size_t bound) {
  if (bound == 0) throw InputError("search bound must be at least 1");
  CommonSource built;
  built.method = ConstructionMethod::kLinearForm;
  built.linear_form.push_back(1);
  built.source = ms.front();
  for (std::size_t k = 1; k < ms.size(); ++k) {
    const std::size_t target = span_dimension(ms.subspan(0, k + 1));
    bool found = false;
    for (std::size_t j = 0; j < bound && !found; ++j) {
      const Rational c = search_candidate(j);
      Matrix candidate = built.source + mat_scale(c, ms[k]);
      if (degree_of(min_poly_matrix(candidate)) == target) {
        built.linear_form.push_back(c);
        built.source = std::move(candidate);
        found = true;
      }
    }
    if (!found) {
      throw SearchExhaustedError("no admissible coefficient for matrix " + std::to_string(k + 1) +
                                 " among the first " + std::to_string(bound) + " candidates");
    }
  }
  for (const auto& m : ms) {
    auto p = express_as_polynomial(m, built.source);
    if (!p) throw InternalError("input matrix is not a polynomial in the constructed source");
    built.polynomials.push_back(std::move(*p));
  }
  return built;
}

}  // namespace

bool replay(const CommonSource& source, std::span<const Matrix> ms) {
  if (source.polynomials.size() != ms.size()) return false;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (evaluate(source.polynomials[i], source.source) != ms[i]) return false;
  }
  return true;
}

CommonSource construct_common_source(std::span<const Matrix> ms, std::size_t bound) {
  if (!commute_check(ms)) throw InputError("construct_common_source: matrices do not commute");
  std::vector<Poly> minimal;
  for (const auto& m : ms) minimal.push_back(min_poly_matrix(m));

  const auto inseparable = std::count_if(minimal.begin(), minimal.end(),
                                         [](const Poly& p) { return !is_separable(p); });
  std::optional<CommonSource> out;
  if (inseparable <= 1) {
    try {
      out = linear_form_source(ms, bound);
    } catch (const SearchExhaustedError&) {
      out = try_cyclic_member(ms, minimal);
      if (!out) throw;
    }
  } else {
    out = try_cyclic_member(ms, minimal);
    if (!out) {
      throw HypothesisNotMetError(std::to_string(inseparable) +
                                  " members are not diagonalizable and none is cyclic");
    }
  }
  if (!replay(*out, ms)) throw InternalError("constructed source failed replay verification");
  return std::move(*out);
}

std::optional<NegativeCertificate> negative_certificate(const Matrix& a, const Matrix& b) {
  const Matrix pair[] = {a, b};
  if (!commute_check(pair)) throw InputError("negative_certificate: matrices do not commute");
  const Poly mu_a = min_poly_matrix(a);
  const Poly mu_b = min_poly_matrix(b);
  if (mu_a.degree() < 2 || mu_b.degree() < 2 || is_separable(mu_a) || is_separable(mu_b)) {
    return std::nullopt;
  }
  NegativeCertificate cert;
  cert.degree_a = degree_of(mu_a);
  cert.degree_b = degree_of(mu_b);
  cert.span_dimension = span_dimension(pair);
  cert.size = a.rows();
  if (cert.degree_a * cert.degree_b != cert.span_dimension) return std::nullopt;
  cert.verdict = cert.span_dimension == cert.size ? Verdict::kNegativeAbsolute : Verdict::kNegativeInSpan;
  return cert;
}

AnalysisReport analyze(std::span<const Matrix> ms, const AnalysisOptions& options) {
  if (options.trials == 0) throw InputError("trials must be >= 1");
  AnalysisReport report;
  report.options = options;
  report.matrix_count = ms.size();
  report.commuting = commute_check(ms);  // validates shapes
  report.size = ms.front().rows();
  for (const auto& m : ms) {
    report.minimal_polynomials.push_back(min_poly_matrix(m));
    const Poly& mu = report.minimal_polynomials.back();
    report.separable.push_back(mu.degree() < 2 || is_separable(mu));
  }
  if (!report.commuting) {
    report.verdict = Verdict::kUnknown;
    report.reason = "input error: matrices do not commute";
    return report;
  }

  const auto inseparable = std::count(report.separable.begin(), report.separable.end(), false);
  const bool has_cyclic = std::any_of(
      report.minimal_polynomials.begin(), report.minimal_polynomials.end(),
      [&](const Poly& mu) { return degree_of(mu) == report.size; });

  if (inseparable <= 1 || has_cyclic) {
    try {
      report.construction = construct_common_source(ms, options.bound);
      report.verdict = Verdict::kConstructed;
      return report;
    } catch (const SearchExhaustedError& e) {
      report.verdict = Verdict::kUnknown;
      report.reason = e.what();
      return report;
    } catch (const HypothesisNotMetError&) {
      // A cyclic member that fails to generate the rest: fall through.
    }
  }

  std::vector<std::size_t> effective;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (report.minimal_polynomials[i].degree() >= 2) effective.push_back(i);
  }
  std::vector<Matrix> family;
  for (std::size_t i : effective) family.push_back(ms[i]);

  if (effective.size() == 2) {
    if (auto cert = negative_certificate(family[0], family[1])) {
      report.verdict = cert->verdict;
      report.negative = cert;
      report.negative_pair = std::make_pair(effective[0], effective[1]);
      report.span_dimension = cert->span_dimension;
      return report;
    }
  }

  const SpanBasis span = span_basis(family);
  report.span_dimension = span.dimension();
  if (span.dimension() == report.size) {
    report.randomness_used = true;
    const std::size_t observed = monte_carlo_codim(span, options.trials, options.seed);
    report.evidence = ProbabilisticEvidence{span.dimension(), observed, options.trials, options.seed};
    if (observed < span.dimension()) {
      report.verdict = Verdict::kNegativeAbsoluteProbabilistic;
      return report;
    }
    report.reason = "a random element reached codim = dim = n, but no construction applied";
  } else {
    report.reason = "negative certificate does not apply and dim Q[A_1..A_m] != n";
  }
  report.verdict = Verdict::kUnknown;
  return report;
}

}  // namespace primel
