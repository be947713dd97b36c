#pragma once

// Test-only oracle: rewrites a polynomial that is symmetric under a variable
// swap in terms of the pair's elementary symmetric polynomials. Used to
// cross-check the radical-extension derivation route against the plain
// six-parameter route.

#include <map>
#include <string>

#include "stolarsky/multipoly.hpp"

namespace stolarsky::testing {

/// Replaces the symmetric pair (x1, x2) by e1 = x1 + x2, e2 = x1*x2 over a
/// target VarSet that has e1name/e2name in place of x1/x2. Throws when the
/// input is not symmetric under the swap.
inline MultiPoly rewrite_symmetric_pair(const MultiPoly& p, const std::string& x1,
                                        const std::string& x2, const std::string& e1name,
                                        const std::string& e2name) {
  const auto& vars = p.vars();
  std::vector<std::string> names = vars->names();
  for (auto& n : names) {
    if (n == x1) n = e1name;
    if (n == x2) n = e2name;
  }
  auto target = VarSet::make(names);
  const std::size_t i1 = *vars->index_of(x1), i2 = *vars->index_of(x2);
  const std::size_t o1 = *target->index_of(e1name), o2 = *target->index_of(e2name);

  MultiPoly sum = MultiPoly::variable(vars, x1) + MultiPoly::variable(vars, x2);
  MultiPoly prod = MultiPoly::variable(vars, x1) * MultiPoly::variable(vars, x2);

  MultiPoly rest = p;
  std::vector<MultiPoly::Term> acc;
  while (!rest.is_zero()) {
    // grlex-leading term containing the pair; the symmetric leading term has
    // exponent(x1) >= exponent(x2)
    const MultiPoly::Term* pick = nullptr;
    for (const auto& t : rest.terms()) {
      if (t.mono.exp(i1) > 0 || t.mono.exp(i2) > 0) {
        pick = &t;
        break;
      }
    }
    if (pick == nullptr) break;
    const auto e1 = pick->mono.exp(i1), e2 = pick->mono.exp(i2);
    if (e1 < e2) throw error("rewrite_symmetric_pair: input not symmetric under the swap");
    // subtract coeff * (x1+x2)^(e1-e2) * (x1 x2)^e2 * passenger monomial
    std::vector<std::uint32_t> passenger(pick->mono.exps().begin(), pick->mono.exps().end());
    passenger[i1] = passenger[i2] = 0;
    MultiPoly sub = sum.pow(e1 - e2) * prod.pow(e2);
    rest -= sub.mul_monomial(Monomial(passenger), pick->coeff);
    // accumulate the same passenger with e1/e2 exponents in the target ring
    std::vector<std::uint32_t> out_mono = passenger;
    out_mono[o1] = e1 - e2;
    out_mono[o2] = e2;
    acc.push_back({Monomial(std::move(out_mono)), pick->coeff});
  }
  // pair-free residue carries over unchanged
  for (const auto& t : rest.terms())
    acc.push_back({Monomial(std::vector<std::uint32_t>(t.mono.exps().begin(),
                                                       t.mono.exps().end())),
                   t.coeff});
  return MultiPoly::from_terms(target, std::move(acc));
}

}  // namespace stolarsky::testing
