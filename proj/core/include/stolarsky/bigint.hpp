#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace stolarsky {

/// Arbitrary-precision signed integer. Thin value-semantic wrapper over GMP's
/// mpz_t: sign + magnitude limbs, canonical zero. Immutable-friendly (all
/// operations return fresh values) and safe to share across threads.
class BigInt {
 public:
  BigInt() noexcept { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT(google-explicit-constructor)
  explicit BigInt(std::string_view decimal);

  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  /// Parses a decimal string with optional leading '-'. Returns nullopt on
  /// malformed input.
  static std::optional<BigInt> parse(std::string_view decimal);

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] int sign() const { return mpz_sgn(z_); }
  [[nodiscard]] bool is_zero() const { return mpz_sgn(z_) == 0; }
  [[nodiscard]] bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  [[nodiscard]] bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
  [[nodiscard]] long to_slong() const { return mpz_get_si(z_); }
  [[nodiscard]] double to_double() const { return mpz_get_d(z_); }
  /// Exact count of decimal digits of |value| (1 for zero).
  [[nodiscard]] size_t digit_count() const;

  /// Least nonnegative residue modulo m (m > 0).
  [[nodiscard]] std::uint64_t mod_u64(std::uint64_t m) const;

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt operator-(const BigInt& a) {
    BigInt r;
    mpz_neg(r.z_, a.z_);
    return r;
  }
  BigInt& operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

  /// Nonnegative gcd; gcd(0, 0) = 0.
  friend BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
  }
  friend BigInt abs(const BigInt& a) {
    BigInt r;
    mpz_abs(r.z_, a.z_);
    return r;
  }
  friend BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
  }
  /// Quotient of an exact division; throws if b is zero or does not divide a.
  friend BigInt div_exact(const BigInt& a, const BigInt& b);

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

  /// Raw handle for interop with other GMP-backed types.
  [[nodiscard]] const mpz_t& raw() const { return z_; }
  [[nodiscard]] mpz_t& raw() { return z_; }

 private:
  mpz_t z_;
};

}  // namespace stolarsky
