#pragma once

// Test-only series oracles: exponential built by the same truncated-composition
// technique as the library's log, plus random-series generators.

#include "stolarsky/multipoly.hpp"
#include "stolarsky/rng.hpp"
#include "stolarsky/series.hpp"

namespace stolarsky::testing {

/// exp of a series with zero constant coefficient, truncated composition
/// exp(u) = sum u^n / n! evaluated by Horner.
template <CoeffRing R>
TruncSeries<R> exp_series(const TruncSeries<R>& g) {
  const R one = g.coeff(0).one_like();
  if (!g.coeff(0).is_zero()) throw error("exp_series: constant coefficient must vanish");
  const int k = g.order();
  // Horner over 1 + u*(1/1! + u*(1/2! + ...))
  Rational inv_fact(1);
  for (int n = 2; n <= k; ++n) inv_fact *= Rational(n);
  TruncSeries<R> acc = TruncSeries<R>::constant(k, one.scaled(reciprocal(inv_fact)));
  for (int n = k - 1; n >= 1; --n) {
    inv_fact /= Rational(n + 1);
    acc = g * acc;
    acc.set_coeff(0, acc.coeff(0) + one.scaled(reciprocal(inv_fact)));
  }
  acc = g * acc;
  acc.set_coeff(0, acc.coeff(0) + one);
  return acc;
}

/// Unit-constant series with small integer-polynomial coefficients.
inline TruncSeries<MultiPoly> random_unit_series(SplitMix64& rng, const VarSetPtr& vars,
                                                 int order) {
  TruncSeries<MultiPoly> s =
      TruncSeries<MultiPoly>::constant(order, MultiPoly::constant(vars, Rational(1)));
  for (int i = 1; i <= order; ++i) {
    std::vector<MultiPoly::Term> terms;
    int nterms = static_cast<int>(rng.next() % 3);
    for (int t = 0; t < nterms; ++t) {
      std::vector<std::uint32_t> e(vars->size());
      for (auto& x : e) x = static_cast<std::uint32_t>(rng.next() % 3);
      terms.push_back({Monomial(std::move(e)),
                       Rational(static_cast<long>(rng.next() % 7) - 3)});
    }
    s.set_coeff(i, MultiPoly::from_terms(vars, std::move(terms)));
  }
  return s;
}

}  // namespace stolarsky::testing
