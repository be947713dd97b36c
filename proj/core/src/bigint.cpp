#include "stolarsky/bigint.hpp"

#include <cctype>
#include <ostream>

#include "stolarsky/errors.hpp"

namespace stolarsky {

namespace {
bool valid_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

BigInt::BigInt(std::string_view decimal) {
  mpz_init(z_);
  if (!valid_decimal(decimal)) {
    mpz_clear(z_);
    throw parse_error("bad integer literal '" + std::string(decimal) + "'");
  }
  mpz_set_str(z_, std::string(decimal).c_str(), 10);
}

std::optional<BigInt> BigInt::parse(std::string_view decimal) {
  if (!valid_decimal(decimal)) return std::nullopt;
  return BigInt(decimal);
}

std::string BigInt::to_string() const {
  std::string out(mpz_sizeinbase(z_, 10) + 2, '\0');
  mpz_get_str(out.data(), 10, z_);
  out.resize(out.find('\0'));
  return out;
}

size_t BigInt::digit_count() const {
  // mpz_sizeinbase may overestimate by one for base 10
  size_t n = mpz_sizeinbase(z_, 10);
  if (n <= 1) return 1;
  mpz_t probe;
  mpz_init(probe);
  mpz_ui_pow_ui(probe, 10, static_cast<unsigned long>(n - 1));
  if (mpz_cmpabs(z_, probe) < 0) --n;
  mpz_clear(probe);
  return n;
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  mpz_t r, mm;
  mpz_init(r);
  mpz_init_set_ui(mm, m);
  mpz_fdiv_r(r, z_, mm);
  std::uint64_t out = mpz_get_ui(r);
  mpz_clear(r);
  mpz_clear(mm);
  return out;
}

BigInt div_exact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw division_by_zero();
  BigInt q, r;
  mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
  if (!r.is_zero()) throw error("div_exact: not divisible");
  return q;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace stolarsky
