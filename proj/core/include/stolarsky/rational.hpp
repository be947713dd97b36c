#pragma once

#include <gmp.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "stolarsky/bigint.hpp"

namespace stolarsky {

/// Exact rational scalar in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1, so structural equality is value equality. This is the
/// coefficient field for every symbolic computation in the library.
class Rational {
 public:
  Rational() noexcept { mpq_init(q_); }
  Rational(long n) {  // NOLINT(google-explicit-constructor)
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long n, long d);
  Rational(const BigInt& n, const BigInt& d);
  Rational(const BigInt& n) {  // NOLINT(google-explicit-constructor)
    mpq_init(q_);
    mpq_set_z(q_, n.raw());
  }
  /// Parses "p", "-p" or "p/q" (decimal). Throws parse_error on bad input.
  explicit Rational(std::string_view text);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  static std::optional<Rational> parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const;
  [[nodiscard]] BigInt denominator() const;
  [[nodiscard]] int sign() const { return mpq_sgn(q_); }
  [[nodiscard]] bool is_zero() const { return mpq_sgn(q_) == 0; }
  [[nodiscard]] bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
  [[nodiscard]] bool is_integer() const;
  /// Round-to-nearest double conversion of the exact value.
  [[nodiscard]] double to_double() const { return mpq_get_d(q_); }
  /// "p" when the denominator is 1, otherwise "p/q".
  [[nodiscard]] std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  friend Rational abs(const Rational& a) {
    Rational r;
    mpq_abs(r.q_, a.q_);
    return r;
  }
  /// 1/a; throws division_by_zero on zero.
  friend Rational reciprocal(const Rational& a);
  friend Rational pow(const Rational& base, long e);

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  mpq_t q_;
};

}  // namespace stolarsky
