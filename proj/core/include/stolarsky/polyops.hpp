#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stolarsky/multipoly.hpp"

namespace stolarsky {

/// Pseudo-remainder of a by b with respect to `var`:
/// lc(b)^(deg a - deg b + 1) * a = q*b + r, deg_var r < deg_var b.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// Resultant with respect to `var`, Sylvester-determinant sign convention,
/// computed by the subresultant polynomial remainder sequence. Both inputs
/// must have positive degree in `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var);

/// Resultant via fraction-free Bareiss elimination of the Sylvester matrix.
/// Same value as resultant(); quadratic-size dense alternative kept as an
/// independent route for cross-checking.
MultiPoly resultant_sylvester(const MultiPoly& p, const MultiPoly& q, std::size_t var);

/// Primitive gcd over the rationals of two univariate polynomials (all
/// variables other than `var` must be absent). Result has integer content 1
/// and positive leading coefficient; gcd(p, 0) = normalized p; gcd(0, 0) = 0.
MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q, std::size_t var);

/// Proof object for "resultant(p, q) != 0": either a prime modulus where the
/// reduced resultant is a nonzero residue (and neither leading coefficient
/// vanishes), or the full exact resultant value.
struct ResultantCertificate {
  struct Modular {
    std::uint64_t prime;
    std::uint64_t residue;  // nonzero
  };
  struct Exact {
    BigInt value;  // nonzero
  };
  std::variant<Modular, Exact> witness;

  [[nodiscard]] bool is_modular() const { return std::holds_alternative<Modular>(witness); }
  [[nodiscard]] std::string describe() const;
};

struct certificate_exhausted : error {
  explicit certificate_exhausted(int budget)
      : error("no certifying prime found after " + std::to_string(budget) +
              " attempts; exact fallback required") {}
};

/// Modular nonzero-resultant certificate for univariate integer polynomials.
/// Tries up to `prime_budget` fixed 31-bit primes; throws certificate_exhausted
/// when every admissible prime yields residue 0 (e.g. when the resultant is
/// genuinely zero).
ResultantCertificate certify_resultant_nonzero(const MultiPoly& p, const MultiPoly& q,
                                               std::size_t var, int prime_budget = 16);

/// Exact integer resultant of univariate integer polynomials (subresultant
/// PRS over the integers).
BigInt resultant_univariate_exact(const MultiPoly& p, const MultiPoly& q, std::size_t var);

/// Resultant of the mod-p reductions over F_p; nullopt when a leading
/// coefficient vanishes mod p (prime not admissible).
std::optional<std::uint64_t> resultant_mod_prime(const MultiPoly& p, const MultiPoly& q,
                                                 std::size_t var, std::uint64_t prime);

/// Certificate with exact fallback: a modular witness if one exists within the
/// budget, else the exact resultant (which may be zero — `nonzero` says which).
struct CertifyOrExactResult {
  std::optional<ResultantCertificate> certificate;  // set when nonzero
  std::optional<BigInt> exact_zero_witness;         // set when resultant == 0
  [[nodiscard]] bool nonzero() const { return certificate.has_value(); }
};
CertifyOrExactResult certify_or_exact(const MultiPoly& p, const MultiPoly& q, std::size_t var,
                                      int prime_budget = 16);

}  // namespace stolarsky
