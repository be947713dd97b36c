#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stolarsky/multipoly.hpp"

namespace stolarsky {

/// A polynomial together with a rational prefactor and a signed monomial
/// (negative exponents denote division, valid under the branch hypotheses
/// w != 0, v != 0): value = scale * prod(var^exp) * core.
struct ScaledPoly {
  Rational scale;
  std::map<std::string, int> mono;
  MultiPoly core;

  static ScaledPoly plain(MultiPoly p) { return {Rational(1), {}, std::move(p)}; }
  [[nodiscard]] bool is_zero() const { return scale.is_zero() || core.is_zero(); }

  /// Exact equality as rational functions (cross-multiplied, no orientation
  /// assumptions).
  [[nodiscard]] bool equivalent(const ScaledPoly& o) const;

  /// "2/8505 * w^-1" style rendering of scale and monomial; "1" when trivial.
  [[nodiscard]] std::string prefactor_string() const;
  [[nodiscard]] std::string to_string() const;
};

/// Outcome of comparing a derived coefficient against a stored fixture:
/// `value_equal` is the semantic check; `same_orientation` is false when the
/// two agree only up to an overall sign flip of (scale, core).
struct FixtureMatch {
  bool value_equal = false;
  bool same_orientation = true;
};
FixtureMatch match_scaled(const ScaledPoly& derived, const ScaledPoly& fixture);

/// One fixture file: free-form key/value fields plus typed accessors for the
/// common ones. Unknown keys are preserved.
struct Fixture {
  std::string stage;
  std::map<std::string, std::string> fields;
  std::vector<std::string> flags;

  [[nodiscard]] const std::string& field(const std::string& key) const;
  [[nodiscard]] std::optional<std::string> maybe_field(const std::string& key) const;
  [[nodiscard]] VarSetPtr vars() const;
  [[nodiscard]] MultiPoly poly(const std::string& key = "poly") const;
  [[nodiscard]] ScaledPoly scaled_poly() const;  // prefactor/prefactor_monomial/poly
  [[nodiscard]] BigInt bigint(const std::string& key) const;
  [[nodiscard]] int integer(const std::string& key) const;
};

/// Loads every *.txt fixture in a directory, keyed by stage name. Throws on
/// unreadable directories or malformed files.
class FixtureSet {
 public:
  static FixtureSet load_dir(const std::string& dir);
  [[nodiscard]] const Fixture& get(const std::string& stage) const;
  [[nodiscard]] bool has(const std::string& stage) const { return by_stage_.count(stage) > 0; }
  [[nodiscard]] std::size_t size() const { return by_stage_.size(); }

 private:
  std::map<std::string, Fixture> by_stage_;
};

/// Parses the prefactor-monomial grammar "w^-3*v^-2" into signed exponents.
std::map<std::string, int> parse_signed_monomial(std::string_view text);

}  // namespace stolarsky
