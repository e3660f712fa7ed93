#pragma once

#include "staircase/graph.hpp"
#include "staircase/rational_function.hpp"
#include "staircase/theorems.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

/// Outcome of one check. Values are rendered as strings so that exact
/// integers, rationals and high-precision floats survive JSON unchanged.
struct VerificationReport {
  std::string subject;
  nlohmann::json params = nlohmann::json::object();
  std::string expected;
  std::string observed;
  std::string residual;
  bool pass = false;
  std::string notes;

  bool operator==(const VerificationReport&) const = default;
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(std::span<const VerificationReport> reports);
/// Aligned summary table, one row per check, then a totals line.
std::string render_text(std::span<const VerificationReport> reports);

enum class GFStatus { Verified, Discrepant };
std::string_view to_string(GFStatus s);

/// A generating function as published, next to the derived one.
struct PublishedGF {
  Family family;
  int k;
  std::string_view printed_text;
  Poly printed_numerator;    // verbatim, not normalized
  Poly printed_denominator;  // verbatim, not normalized
  GFStatus status;
  RationalFunction derived;  // transfer_gf(family, k)
  bool numerator_matches;    // after scaling both forms to den(0) = 1
  /// Denominator coefficients that differ from the derived ones only in
  /// sign; nullopt when some coefficient differs in magnitude.
  std::optional<int> denominator_sign_flips;
  /// Known misprint, if any, diagnosed from the derived form.
  std::string_view known_erratum;
};

/// Registered pairs: (KG,3), (KG,4), (KG,5), (Grid,3), (RT,3).
std::span<const std::pair<Family, int>> published_gfs();
/// Throws std::out_of_range ("no printed closed form") for other pairs.
PublishedGF published_gf(Family family, int k);

/// Printed explicit formula for s_3(KG_{2,n}) at working precision.
BigFloat binet_kg3(int n);

/// Coefficient-level check of the family's functional equations on refined
/// counts for n = 1..n_max, plus the aggregation and boundary identities.
VerificationReport lemma_residuals(Family family, int k, int n_max);

/// Closed form against the partial sum of c_n x^n, n = 1..N. Throws
/// std::invalid_argument when the series tail estimate is not below tol/10.
VerificationReport verify_theorem(Family family, int k, const Rational& x, std::size_t N, const BigFloat& tol,
                                  Transcription form = Transcription::Corrected);

/// Path generating function 1 + sum_n p_k(n) x^n built from Chebyshev U at
/// y = (1 - x) / (2x).
RationalFunction path_gf_chebyshev(int k);

/// Empty `ks` / `xs` select each suite's defaults (k = 2..6 for lemmas,
/// k = 3..5 and x in {1/64, 1/128} for theorems).
struct SuiteOptions {
  std::vector<int> ks;
  std::vector<Rational> xs;
  std::size_t order = 120;
  std::string tolerance = "1e-20";
  int lemma_n_max = 30;
};

inline constexpr std::string_view kSuiteNames[] = {"lemmas", "examples", "theorems", "chebyshev", "all"};

/// Throws std::invalid_argument for an unknown suite name.
std::vector<VerificationReport> run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace staircase
