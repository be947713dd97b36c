#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stolarsky/errors.hpp"
#include "stolarsky/rational.hpp"
#include "stolarsky/varset.hpp"

namespace stolarsky {

/// Exponent vector; its length always equals the owning VarSet's size.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}
  static Monomial unit(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

  [[nodiscard]] std::size_t size() const { return e_.size(); }
  [[nodiscard]] std::uint32_t exp(std::size_t i) const { return e_[i]; }
  [[nodiscard]] std::uint32_t total_degree() const;
  [[nodiscard]] bool is_unit() const;

  [[nodiscard]] Monomial operator*(const Monomial& o) const;
  /// Componentwise quotient, or nullopt when some exponent would go negative.
  [[nodiscard]] std::optional<Monomial> divide(const Monomial& o) const;
  [[nodiscard]] Monomial pow(std::uint32_t k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  [[nodiscard]] std::span<const std::uint32_t> exps() const { return e_; }

 private:
  std::vector<std::uint32_t> e_;
};

/// Graded-lexicographic order: higher total degree first, ties broken
/// lexicographically by the VarSet's declared variable order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct inexact_division;  // defined below

/// Canonical sparse multivariate polynomial over Rational. Terms are kept
/// sorted grlex-descending with no zero coefficients, so operator== is
/// structural equality of values.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  MultiPoly() = default;
  static MultiPoly zero(VarSetPtr vars);
  static MultiPoly constant(VarSetPtr vars, Rational c);
  static MultiPoly variable(VarSetPtr vars, std::string_view name, std::uint32_t power = 1);
  /// Builds from arbitrary (monomial, coefficient) pairs; merges and
  /// canonicalizes.
  static MultiPoly from_terms(VarSetPtr vars, std::vector<Term> terms);

  [[nodiscard]] const VarSetPtr& vars() const { return vars_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_value() const;  // value when is_constant()
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] std::uint32_t total_degree() const;  // 0 for the zero polynomial
  [[nodiscard]] std::uint32_t degree_in(std::size_t var) const;
  [[nodiscard]] bool contains_var(std::size_t var) const;
  [[nodiscard]] bool is_homogeneous() const;

  [[nodiscard]] MultiPoly zero_like() const { return zero(vars_); }
  [[nodiscard]] MultiPoly one_like() const { return constant(vars_, Rational(1)); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  [[nodiscard]] MultiPoly scaled(const Rational& c) const;
  [[nodiscard]] MultiPoly mul_monomial(const Monomial& m, const Rational& c) const;
  [[nodiscard]] MultiPoly pow(std::uint32_t k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Leading term in the grlex order. Precondition: nonzero.
  [[nodiscard]] const Term& leading_term() const;

  /// Quotient and remainder of division by a single divisor: *this =
  /// q * den + r, where no term of r is divisible by den's leading monomial.
  [[nodiscard]] std::pair<MultiPoly, MultiPoly> div_rem(const MultiPoly& den) const;
  /// Exact quotient; throws inexact_division (carrying the nonzero remainder)
  /// when den does not divide exactly. Throws division_by_zero for den = 0.
  [[nodiscard]] MultiPoly div_exact(const MultiPoly& den) const;

  /// Exact substitution of variables by polynomials over a target VarSet.
  /// Variables without an explicit binding map to the same-named variable of
  /// the target set; a missing name there is an error.
  [[nodiscard]] MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings,
                                     const VarSetPtr& target) const;

  /// Coefficient list c0..cd of *this viewed as a polynomial in `var`; the
  /// coefficients keep the full VarSet but are free of `var`. cd != 0 for
  /// nonzero input; the zero polynomial yields an empty list.
  [[nodiscard]] std::vector<MultiPoly> as_univariate(std::size_t var) const;
  static MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, std::size_t var);

  /// Evaluation at an exact rational point (one value per variable).
  [[nodiscard]] Rational eval(std::span<const Rational> point) const;

  /// Positive rational content: the unique c > 0 with p = c * (integer
  /// polynomial of content 1). Content of 0 is 0.
  [[nodiscard]] Rational content() const;
  /// Componentwise minimum exponent vector over all terms.
  [[nodiscard]] Monomial monomial_content() const;
  /// this / (content * sign(lead) * monomial_content): integer coefficients,
  /// content 1, positive leading coefficient, no common monomial factor.
  struct Normalized;
  [[nodiscard]] Normalized normalized() const;

  /// Canonical text form, e.g. "81*w^4*s^4 - 162*w^2*v^2*s^4". Zero prints
  /// "0"; rational coefficients print as "p/q".
  [[nodiscard]] std::string to_string() const;
  /// Parses the same grammar (signs, rational coefficients, var^exp factors
  /// joined by '*'); unknown variable names are an error.
  static MultiPoly parse(VarSetPtr vars, std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

 private:
  void check_same_vars(const MultiPoly& o) const {
    if (!same_vars(vars_, o.vars_)) throw varset_mismatch();
  }

  VarSetPtr vars_;
  std::vector<Term> terms_;  // grlex-descending, no zero coefficients
};

struct MultiPoly::Normalized {
  Rational scale;  // original = scale * mono * core
  Monomial mono;
  MultiPoly core;
};

/// Raised by div_exact; `remainder` is the nonzero residual at the point the
/// division failed, itself a useful test signal.
struct inexact_division : error {
  explicit inexact_division(MultiPoly rem)
      : error("inexact polynomial division"), remainder(std::move(rem)) {}
  MultiPoly remainder;
};

}  // namespace stolarsky
