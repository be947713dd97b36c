#pragma once

#include <map>

#include "stolarsky/ext_ring.hpp"
#include "stolarsky/quad_ext.hpp"
#include "stolarsky/series.hpp"

namespace stolarsky {

/// E_k(p1, p2, u(x), v(x)) = (log L_k(p1 u, p1 v) - log L_k(p2 u, p2 v)) / (p1 - p2),
/// with the division supplied by the caller (it depends on how p1 - p2 sits in
/// the coefficient ring: a polynomial, twice a radical, or twice a surd).
template <CoeffRing R, typename DivFn>
TruncSeries<R> e_series(int k, const R& p1, const R& p2, const TruncSeries<R>& u,
                        const TruncSeries<R>& v, DivFn&& divide) {
  TruncSeries<R> num = log_unit(compose_L(k, p1, p1, u, v)) - log_unit(compose_L(k, p2, p2, u, v));
  return divide_coeffs(num, std::forward<DivFn>(divide));
}

/// Defect series F_k(x) = E_k(p,q, E_k(a,b,x,-x), E_k(c,d,x,-x)) - E_k(p,q,x,-x),
/// truncated at order k-1, in the reparametrized radical extension with
/// a,b = w+v +- alpha, c,d = w-v +- beta, p,q = w +- gamma.
TruncSeries<ExtElement> build_defect_reparam(int k, std::shared_ptr<const ExtRing> ring);

/// The same series over the plain six-parameter polynomial ring
/// [a, b, c, d, p, q]; divisions by a-b, c-d, p-q are exact polynomial
/// divisions.
TruncSeries<MultiPoly> build_defect_raw(int k, const VarSetPtr& vars);
VarSetPtr raw_defect_vars();

/// Concrete candidate refutation series over Q(sqrt 13): outer parameters
/// 3 +- sqrt(13); inner means (7,5) and (1,-1), swapped for the mirrored case.
TruncSeries<QuadExt> build_defect_refutation(int k, bool inner_geometric_second);

/// Radical-free Taylor coefficients of a reparametrized defect series,
/// indexed by even order. Verifies that odd orders (and order 0) vanish and
/// that every coefficient passes the parity projection.
std::map<int, MultiPoly> project_even_coefficients(const TruncSeries<ExtElement>& f);

}  // namespace stolarsky
