#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primel/matrix.hpp"
#include "primel/poly.hpp"
#include "primel/quotient.hpp"

namespace primel {

enum class Verdict {
  kConstructed,
  kNegativeInSpan,
  kNegativeAbsolute,
  kNegativeAbsoluteProbabilistic,
  kUnknown,
};

/// "CONSTRUCTED", "NEGATIVE_IN_SPAN", ...
std::string_view to_string(Verdict v);

enum class ConstructionMethod {
  /// One member already has deg mu = n and the rest are polynomials in it.
  kCyclicMember,
  /// C = A_1 + c_2 A_2 + ... for an injective linear form c.
  kLinearForm,
};

std::string_view to_string(ConstructionMethod m);

struct CommonSource {
  ConstructionMethod method = ConstructionMethod::kLinearForm;
  /// Coefficients of C in the input matrices (a unit vector for kCyclicMember).
  std::vector<Rational> linear_form;
  Matrix source;
  /// polynomials[i](source) == input[i]
  std::vector<Poly> polynomials;
};

/// Builds C with every input a polynomial in C, and verifies p_i(C) = A_i
/// before returning. Under the hypothesis C = A_1 + c_2 A_2 + ..., the c_k
/// fixed left to right in search_candidate order, each accepted once
/// deg mu(C_k) = dim Q[A_1, ..., A_k]. Otherwise a cyclic member is used
/// when one generates the rest. Throws HypothesisNotMetError when two or more members
/// have inseparable minimal polynomials and no member is cyclic,
/// SearchExhaustedError when the coefficient search runs out, and
/// InternalError if verification fails.
CommonSource construct_common_source(std::span<const Matrix> ms,
                                     std::size_t bound = kDefaultSearchBound);

/// True iff p_i(C) == A_i for every i.
bool replay(const CommonSource& source, std::span<const Matrix> ms);

struct NegativeCertificate {
  Verdict verdict = Verdict::kNegativeInSpan;  // kNegativeInSpan or kNegativeAbsolute
  std::size_t degree_a = 0;
  std::size_t degree_b = 0;
  std::size_t span_dimension = 0;
  std::size_t size = 0;
};

/// Applies when both minimal polynomials are inseparable and
/// deg mu_A * deg mu_B = dim Q[A, B]: then no C inside Q[A, B] works, and if
/// that dimension also equals n, no C works at all. nullopt otherwise.
std::optional<NegativeCertificate> negative_certificate(const Matrix& a, const Matrix& b);

struct ProbabilisticEvidence {
  std::size_t span_dimension = 0;
  std::size_t observed_codim = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

struct AnalysisOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t bound = kDefaultSearchBound;
};

struct AnalysisReport {
  std::size_t matrix_count = 0;
  std::size_t size = 0;
  bool commuting = false;
  std::vector<Poly> minimal_polynomials;
  std::vector<bool> separable;

  Verdict verdict = Verdict::kUnknown;
  std::optional<CommonSource> construction;
  std::optional<NegativeCertificate> negative;
  /// Input indices of the pair the negative certificate refers to.
  std::optional<std::pair<std::size_t, std::size_t>> negative_pair;
  std::optional<ProbabilisticEvidence> evidence;
  std::optional<std::size_t> span_dimension;
  std::string reason;

  bool randomness_used = false;
  AnalysisOptions options;
};

/// Full decision pipeline. Throws InputError for empty input or matrices that
/// are not square of one size; non-commuting input yields kUnknown.
///
/// Scalar members (deg mu = 1) lie in every Q[C], so negative checks run on
/// the remaining members only.
AnalysisReport analyze(std::span<const Matrix> ms, const AnalysisOptions& options = {});

}  // namespace primel
