#include <doctest.h>

#include "stolarsky/bigint.hpp"
#include "stolarsky/errors.hpp"

using stolarsky::BigInt;

namespace {

// independent Euclid oracle on machine integers, for gcd cases that fit
long euclid(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TEST_CASE("decimal round trip survives values beyond 64 bits") {
  BigInt v("28242953648100000000");
  CHECK(v.to_string() == "28242953648100000000");
  CHECK(v > BigInt(0l));
  CHECK_FALSE(v.fits_slong());
  CHECK(BigInt("-912066926976343384").to_string() == "-912066926976343384");
}

TEST_CASE("parse rejects malformed input") {
  CHECK_FALSE(BigInt::parse("12a").has_value());
  CHECK_FALSE(BigInt::parse("").has_value());
  CHECK_FALSE(BigInt::parse("1 2").has_value());
  CHECK(BigInt::parse("-37").has_value());
  CHECK_THROWS_AS(BigInt("x"), stolarsky::parse_error);
}

TEST_CASE("gcd of the printed reduced fraction is 1") {
  CHECK(gcd(BigInt(12352), BigInt(5775)) == BigInt(1));
}

TEST_CASE("gcd conventions") {
  CHECK(gcd(BigInt(0l), BigInt(7)) == BigInt(7));
  CHECK(gcd(BigInt(0l), BigInt(0l)) == BigInt(0l));
  CHECK(gcd(BigInt(-12), BigInt(18)) == BigInt(6));
}

TEST_CASE("gcd of the order-8 and order-10 prefactor denominators") {
  // Euclid oracle: 2841733125 = 297 * 9568125, so the smaller divides the larger.
  long expected = euclid(9568125L, 2841733125L);
  CHECK(expected == 9568125L);
  CHECK(gcd(BigInt(9568125L), BigInt(2841733125L)) == BigInt(expected));
}

TEST_CASE("arithmetic and exact division") {
  BigInt a("123456789012345678901234567890");
  BigInt b(997);
  CHECK(div_exact(a * b, b) == a);
  CHECK_THROWS_AS(div_exact(BigInt(10), BigInt(3)), stolarsky::error);
  CHECK_THROWS_AS(div_exact(BigInt(10), BigInt(0l)), stolarsky::division_by_zero);
  CHECK((a - a).is_zero());
  CHECK((-a).sign() == -1);
}

TEST_CASE("residues for the certificate primes") {
  BigInt a("912066926976343384");
  CHECK(a.mod_u64(2147483647ull) == 912066926976343384ull % 2147483647ull);
  BigInt neg(-5);
  CHECK(neg.mod_u64(7) == 2);  // least nonnegative residue
}

TEST_CASE("pow and digit count") {
  CHECK(pow(BigInt(10), 20).to_string() == "100000000000000000000");
  CHECK(BigInt("912066926976343384").digit_count() == 18);
}
