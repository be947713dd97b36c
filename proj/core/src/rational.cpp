#include "stolarsky/rational.hpp"

#include <ostream>

#include "stolarsky/errors.hpp"

namespace stolarsky {

Rational::Rational(long n, long d) {
  mpq_init(q_);
  if (d == 0) {
    mpq_clear(q_);
    throw division_by_zero();
  }
  mpq_set_si(q_, n, 1);
  mpq_t den;
  mpq_init(den);
  mpq_set_si(den, d, 1);
  mpq_div(q_, q_, den);
  mpq_clear(den);
}

Rational::Rational(const BigInt& n, const BigInt& d) {
  mpq_init(q_);
  if (d.is_zero()) {
    mpq_clear(q_);
    throw division_by_zero();
  }
  mpz_set(mpq_numref(q_), n.raw());
  mpz_set(mpq_denref(q_), d.raw());
  mpq_canonicalize(q_);
}

Rational::Rational(std::string_view text) {
  mpq_init(q_);
  auto parsed = parse(text);
  if (!parsed) {
    mpq_clear(q_);
    throw parse_error("bad rational literal '" + std::string(text) + "'");
  }
  mpq_set(q_, parsed->q_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = BigInt::parse(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = BigInt::parse(text.substr(0, slash));
  auto d = BigInt::parse(text.substr(slash + 1));
  if (!n || !d || d->is_zero()) return std::nullopt;
  return Rational(*n, *d);
}

BigInt Rational::numerator() const {
  BigInt n;
  mpz_set(n.raw(), mpq_numref(q_));
  return n;
}

BigInt Rational::denominator() const {
  BigInt d;
  mpz_set(d.raw(), mpq_denref(q_));
  return d;
}

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

std::string Rational::to_string() const {
  std::string out = numerator().to_string();
  if (!is_integer()) out += "/" + denominator().to_string();
  return out;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw division_by_zero();
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational reciprocal(const Rational& a) {
  if (a.is_zero()) throw division_by_zero();
  Rational r;
  mpq_inv(r.q_, a.q_);
  return r;
}

Rational pow(const Rational& base, long e) {
  if (e < 0) return pow(reciprocal(base), -e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), static_cast<unsigned long>(e));
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace stolarsky
