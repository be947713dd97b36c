#include "stolarsky/defect.hpp"

namespace stolarsky {

TruncSeries<ExtElement> build_defect_reparam(int k, std::shared_ptr<const ExtRing> ring) {
  if (k < 3) throw error("defect series needs k >= 3");
  const int K = k - 1;
  const auto& vars = ring->vars();
  auto poly = [&](const char* name) {
    return ExtElement::from_poly(ring, MultiPoly::variable(vars, name));
  };
  ExtElement w = poly("w"), v = poly("v");
  ExtElement alpha = ExtElement::radical(ring, 0);
  ExtElement beta = ExtElement::radical(ring, 1);
  ExtElement gamma = ExtElement::radical(ring, 2);

  ExtElement a = w + v + alpha, b = w + v - alpha;
  ExtElement c = w - v + beta, d = w - v - beta;
  ExtElement p = w + gamma, q = w - gamma;

  ExtElement one = a.one_like();
  TruncSeries<ExtElement> x = TruncSeries<ExtElement>::monomial_x(K, one);
  TruncSeries<ExtElement> nx = TruncSeries<ExtElement>::monomial_x(K, -one);

  const Rational two(2);
  auto div_alpha = [&](const ExtElement& e) { return e.div_radical(0, two); };
  auto div_beta = [&](const ExtElement& e) { return e.div_radical(1, two); };
  auto div_gamma = [&](const ExtElement& e) { return e.div_radical(2, two); };

  TruncSeries<ExtElement> inner1 = e_series(k, a, b, x, nx, div_alpha);
  TruncSeries<ExtElement> inner2 = e_series(k, c, d, x, nx, div_beta);
  TruncSeries<ExtElement> outer = e_series(k, p, q, inner1, inner2, div_gamma);
  TruncSeries<ExtElement> diag = e_series(k, p, q, x, nx, div_gamma);
  return outer - diag;
}

VarSetPtr raw_defect_vars() { return VarSet::make({"a", "b", "c", "d", "p", "q"}); }

TruncSeries<MultiPoly> build_defect_raw(int k, const VarSetPtr& vars) {
  if (k < 3) throw error("defect series needs k >= 3");
  const int K = k - 1;
  auto var = [&](const char* name) { return MultiPoly::variable(vars, name); };
  MultiPoly a = var("a"), b = var("b"), c = var("c"), d = var("d"), p = var("p"), q = var("q");
  MultiPoly one = MultiPoly::constant(vars, Rational(1));

  TruncSeries<MultiPoly> x = TruncSeries<MultiPoly>::monomial_x(K, one);
  TruncSeries<MultiPoly> nx = TruncSeries<MultiPoly>::monomial_x(K, -one);

  auto div_by = [](const MultiPoly& g) {
    return [g](const MultiPoly& coeff) { return coeff.div_exact(g); };
  };
  TruncSeries<MultiPoly> inner1 = e_series(k, a, b, x, nx, div_by(a - b));
  TruncSeries<MultiPoly> inner2 = e_series(k, c, d, x, nx, div_by(c - d));
  TruncSeries<MultiPoly> outer = e_series(k, p, q, inner1, inner2, div_by(p - q));
  TruncSeries<MultiPoly> diag = e_series(k, p, q, x, nx, div_by(p - q));
  return outer - diag;
}

TruncSeries<QuadExt> build_defect_refutation(int k, bool inner_geometric_second) {
  if (k < 3) throw error("defect series needs k >= 3");
  const int K = k - 1;
  const Rational thirteen(13);
  auto rat = [&](long v) { return QuadExt::rational(Rational(v), thirteen); };
  QuadExt one = rat(1);
  TruncSeries<QuadExt> x = TruncSeries<QuadExt>::monomial_x(K, one);
  TruncSeries<QuadExt> nx = TruncSeries<QuadExt>::monomial_x(K, -one);

  auto div_rat = [](const Rational& g) {
    return [g](const QuadExt& c) { return c.scaled(reciprocal(g)); };
  };
  auto div_surd2 = [](const QuadExt& c) { return c.div_surd(Rational(2)); };

  TruncSeries<QuadExt> power_pair = e_series(k, rat(7), rat(5), x, nx, div_rat(Rational(2)));
  TruncSeries<QuadExt> geometric = e_series(k, rat(1), rat(-1), x, nx, div_rat(Rational(2)));

  QuadExt p = rat(3) + QuadExt::surd(thirteen);
  QuadExt q = rat(3) - QuadExt::surd(thirteen);
  const auto& inner1 = inner_geometric_second ? power_pair : geometric;
  const auto& inner2 = inner_geometric_second ? geometric : power_pair;
  TruncSeries<QuadExt> outer = e_series(k, p, q, inner1, inner2, div_surd2);
  TruncSeries<QuadExt> diag = e_series(k, p, q, x, nx, div_surd2);
  return outer - diag;
}

std::map<int, MultiPoly> project_even_coefficients(const TruncSeries<ExtElement>& f) {
  std::map<int, MultiPoly> out;
  for (int m = 0; m <= f.order(); ++m) {
    MultiPoly c = f.coeff(m).parity_project();
    if (m % 2 == 1 || m == 0) {
      if (!c.is_zero())
        throw error("defect series: coefficient at order " + std::to_string(m) +
                    " should vanish but is " + c.to_string());
      continue;
    }
    out.emplace(m, std::move(c));
  }
  return out;
}

}  // namespace stolarsky
