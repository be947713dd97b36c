#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "stolarsky/defect.hpp"
#include "stolarsky/fixtures.hpp"
#include "stolarsky/polyops.hpp"
#include "stolarsky/report.hpp"

namespace stolarsky {

struct RunConfig {
  int order = 13;  // series order k (coefficients through x^(k-1))
  std::uint64_t seed = 0;
  int samples = 10000;
  double tol = 1e-12;
  std::string fixtures_dir = "fixtures";
  bool exact_q = false;
  int prime_budget = 16;

  void validate() const;
};

/// A denominator-cleared linear elimination: multiplier * var = rhs, derived
/// from a coefficient that is linear in var (valid under the recorded branch
/// hypothesis that the multiplier does not vanish).
struct Binding {
  std::string var;
  MultiPoly multiplier;
  MultiPoly rhs;

  [[nodiscard]] std::string to_string() const;
  /// Substitutes var := rhs/multiplier and clears denominators by
  /// multiplier^deg_var(p); returns the cleared polynomial and that degree.
  [[nodiscard]] std::pair<MultiPoly, int> apply_cleared(const MultiPoly& p) const;
};

/// Extracts the cleared binding from a coefficient linear in `var`.
/// Throws when the coefficient's degree in var is not exactly 1.
Binding derive_binding(const MultiPoly& coefficient, const std::string& var);

/// Taylor coefficient in prefactor form after optional eliminations:
/// C = scale * monomial * core with core integer, primitive, positive-leading.
ScaledPoly to_scaled_coefficient(const MultiPoly& cleared, const std::map<std::string, int>& clearing);

struct EndgameResult {
  // resultant of the order-8/order-10 eliminants in s, in factored shape
  BigInt r810_content;
  std::map<std::string, int> r810_monomial;
  int r810_vmw_power = 0, r810_vpw_power = 0;
  MultiPoly h32;  // dehomogenizable degree-32 factor
  MultiPoly p810; // univariate in z
  // order-8/order-12 eliminant resultant, shape only (no printed reference)
  BigInt r812_content;
  std::map<std::string, int> r812_monomial;
  int r812_vmw_power = 0, r812_vpw_power = 0;
  MultiPoly h44;
  MultiPoly p812;
  // coprimality certificate for res_z(p810, p812)
  std::optional<ResultantCertificate> q_certificate;
  std::optional<BigInt> q_exact;
  std::string conclusion;
};

/// Resultant elimination endgame on the three cleared eliminants P8, P10,
/// P12 (polynomials in w, v, s).
EndgameResult run_elimination_endgame(const MultiPoly& p8, const MultiPoly& p10,
                                      const MultiPoly& p12, bool exact_q, int prime_budget);

struct RefutationResult {
  Rational order10;            // the decisive coefficient
  Rational order8;             // also nonzero (recorded; see flags)
  std::vector<int> zero_orders;  // verified-zero orders
};
/// Order-10 Taylor coefficient of the concrete candidate defect series
/// (outer parameters 3 +- sqrt(13)), computed exactly in Q(sqrt 13).
RefutationResult refute_candidate(bool v_eq_w, int k = 11);

/// Full machine-checked derivation: builds the defect series, matches every
/// derived coefficient against the fixtures, performs the eliminations and
/// the resultant endgame, certifies coprimality, refutes the two remaining
/// candidates, and numerically verifies the surviving families.
VerificationReport run_full_pipeline(const RunConfig& cfg);

/// One coefficient on demand (for the `derive` command): order 2 gives the
/// raw six-parameter form; orders 4..12 give the reparametrized form with
/// the eliminations applied (t from order 4 up, r from order 8 up).
std::string derive_coefficient_text(int order2m, const RunConfig& cfg);

}  // namespace stolarsky
