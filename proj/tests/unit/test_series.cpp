#include <doctest.h>

#include "series_oracles.hpp"
#include "stolarsky/defect.hpp"
#include "stolarsky/ext_ring.hpp"
#include "stolarsky/quad_ext.hpp"
#include "stolarsky/series.hpp"

using namespace stolarsky;

namespace {

using PolySeries = TruncSeries<MultiPoly>;

VarSetPtr pq_vars() { return VarSet::make({"p", "q"}); }

MultiPoly P(const VarSetPtr& vars, const char* text) { return MultiPoly::parse(vars, text); }

PolySeries x_series(const VarSetPtr& vars, int order) {
  return PolySeries::monomial_x(order, MultiPoly::constant(vars, Rational(1)));
}

}  // namespace

TEST_CASE("series multiplication truncates") {
  auto vars = pq_vars();
  PolySeries x = x_series(vars, 12);
  PolySeries x2 = x * x;
  CHECK(x2.coeff(2) == MultiPoly::constant(vars, Rational(1)));
  for (int i = 0; i <= 12; ++i)
    if (i != 2) CHECK(x2.coeff(i).is_zero());
}

TEST_CASE("exp(x) * exp(-x) is exactly 1 up to the truncation order") {
  auto vars = pq_vars();
  const int K = 12;
  PolySeries ex = testing::exp_series(x_series(vars, K));
  PolySeries emx = testing::exp_series(x_series(vars, K).scaled(Rational(-1)));
  PolySeries prod = ex * emx;
  CHECK(prod.coeff(0) == MultiPoly::constant(vars, Rational(1)));
  for (int i = 1; i <= K; ++i) CHECK(prod.coeff(i).is_zero());
}

TEST_CASE("order mismatch is an error") {
  auto vars = pq_vars();
  CHECK_THROWS_AS((void)(x_series(vars, 3) + x_series(vars, 4)), order_mismatch);
  CHECK_THROWS_AS((void)(x_series(vars, 3) * x_series(vars, 4)), order_mismatch);
}

TEST_CASE("three-term truncation of L on the antidiagonal") {
  // L_3(x, -x) = 1 + x^2/6: the n=2 row cancels, the n=3 row leaves x^2/6
  auto vars = pq_vars();
  const int K = 4;
  MultiPoly one = MultiPoly::constant(vars, Rational(1));
  PolySeries l3 = compose_L(3, one, one, x_series(vars, K), x_series(vars, K).scaled(Rational(-1)));
  CHECK(l3.coeff(0) == one);
  CHECK(l3.coeff(1).is_zero());
  CHECK(l3.coeff(2) == MultiPoly::constant(vars, Rational(1, 6)));
  CHECK(l3.coeff(3).is_zero());
  CHECK(l3.coeff(4).is_zero());
}

TEST_CASE("three-term truncation of L at scaled arguments") {
  // L_3(p x, q x) = 1 + (p+q)x/2 + (p^2+pq+q^2)x^2/6
  auto vars = pq_vars();
  const int K = 2;
  PolySeries l3 = compose_L(3, P(vars, "p"), P(vars, "q"), x_series(vars, K), x_series(vars, K));
  CHECK(l3.coeff(0) == P(vars, "1"));
  CHECK(l3.coeff(1) == P(vars, "1/2*p + 1/2*q"));
  CHECK(l3.coeff(2) == P(vars, "1/6*p^2 + 1/6*p*q + 1/6*q^2"));
}

TEST_CASE("two-term truncation composed with identical scaled arguments") {
  // L_2(u,v) = 1 + (u+v)/2 at u = v = p*x gives 1 + p*x
  auto vars = pq_vars();
  PolySeries l2 = compose_L(2, P(vars, "p"), P(vars, "p"), x_series(vars, 3), x_series(vars, 3));
  CHECK(l2.coeff(0) == P(vars, "1"));
  CHECK(l2.coeff(1) == P(vars, "p"));
  CHECK(l2.coeff(2).is_zero());
}

TEST_CASE("thirteen-term truncation on the antidiagonal has constant term 1") {
  auto vars = pq_vars();
  PolySeries l13 =
      compose_L(13, P(vars, "p"), P(vars, "p"), x_series(vars, 12),
                x_series(vars, 12).scaled(Rational(-1)));
  CHECK(l13.coeff(0) == P(vars, "1"));
  SUBCASE("its log vanishes at every odd order") {
    PolySeries lg = log_unit(l13);
    for (int i = 1; i <= 12; i += 2) CHECK(lg.coeff(i).is_zero());
    CHECK_FALSE(lg.coeff(2).is_zero());
  }
}

TEST_CASE("log of 1 + x") {
  auto vars = pq_vars();
  PolySeries f = x_series(vars, 3);
  f.set_coeff(0, MultiPoly::constant(vars, Rational(1)));
  PolySeries lg = log_unit(f);
  CHECK(lg.coeff(0).is_zero());
  CHECK(lg.coeff(1) == P(vars, "1"));
  CHECK(lg.coeff(2) == MultiPoly::constant(vars, Rational(-1, 2)));
  CHECK(lg.coeff(3) == MultiPoly::constant(vars, Rational(1, 3)));
}

TEST_CASE("log of a truncated exponential is the identity") {
  auto vars = pq_vars();
  PolySeries g = x_series(vars, 8);
  PolySeries lg = log_unit(testing::exp_series(g));
  CHECK(lg == g);
}

TEST_CASE("log requires a unit constant term") {
  auto vars = pq_vars();
  CHECK_THROWS_AS((void)log_unit(x_series(vars, 3)), error);
}

TEST_CASE("exp/log round trip on random unit series") {
  auto vars = pq_vars();
  auto rng = SplitMix64::substream(99, 0);
  for (int i = 0; i < 30; ++i) {
    PolySeries f = testing::random_unit_series(rng, vars, 8);
    PolySeries g = log_unit(f);
    g.set_coeff(0, MultiPoly::zero(vars));
    CHECK(testing::exp_series(g) == f);
  }
}

TEST_CASE("coefficientwise parameter division") {
  auto vars = pq_vars();
  MultiPoly pmq = P(vars, "p - q");
  PolySeries f = PolySeries::zero(1, MultiPoly::zero(vars));
  f.set_coeff(0, pmq);
  f.set_coeff(1, P(vars, "p^2 - q^2"));
  auto divide = [&](const MultiPoly& c) { return c.div_exact(pmq); };
  PolySeries q = divide_coeffs(f, [&](int, const MultiPoly& c) { return divide(c); });
  CHECK(q.coeff(0) == P(vars, "1"));
  CHECK(q.coeff(1) == P(vars, "p + q"));

  SUBCASE("failure reports the offending order") {
    PolySeries bad = PolySeries::constant(1, MultiPoly::constant(vars, Rational(1)));
    try {
      (void)divide_coeffs(bad, [&](int, const MultiPoly& c) { return c.div_exact(pmq); });
      FAIL("expected series_division_error");
    } catch (const series_division_error& e) {
      CHECK(e.order == 0);
    }
  }
}

TEST_CASE("antisymmetric numerators divide exactly by the parameter difference") {
  // the inner series of the defect construction: divisibility must hold at
  // every order, coefficient by coefficient
  auto vars = raw_defect_vars();
  const int K = 12;
  auto one = MultiPoly::constant(vars, Rational(1));
  auto x = PolySeries::monomial_x(K, one);
  auto nx = PolySeries::monomial_x(K, -one);
  MultiPoly p = MultiPoly::variable(vars, "p"), q = MultiPoly::variable(vars, "q");
  PolySeries num = log_unit(compose_L(13, p, p, x, nx)) - log_unit(compose_L(13, q, q, x, nx));
  PolySeries quot = divide_coeffs(num, [&](int, const MultiPoly& c) { return c.div_exact(p - q); });
  CHECK((quot.coeff(2) == MultiPoly::parse(vars, "1/6*p + 1/6*q")));
}

TEST_CASE("extension ring reduces radical squares") {
  auto ring = ExtRing::reparam();
  auto vars = ring->vars();
  ExtElement wv = ExtElement::from_poly(ring, P(vars, "w + v"));
  ExtElement alpha = ExtElement::radical(ring, 0);
  ExtElement prod = (wv + alpha) * (wv - alpha);
  // (w+v+alpha)(w+v-alpha) = (w+v)^2 - (r+s), radical-free
  CHECK(prod.parity_project() == P(vars, "w^2 + 2*w*v + v^2 - r - s"));
}

TEST_CASE("parity projection rejects surviving radicals") {
  auto ring = ExtRing::reparam();
  CHECK_THROWS_AS((void)ExtElement::radical(ring, 0).parity_project(), parity_error);
  CHECK_THROWS_AS((void)(ExtElement::radical(ring, 1) * ExtElement::radical(ring, 2)).parity_project(),
                  parity_error);
}

TEST_CASE("division by a radical") {
  auto ring = ExtRing::reparam();
  auto vars = ring->vars();
  ExtElement gamma = ExtElement::radical(ring, 2);
  ExtElement f = gamma.scaled(Rational(6));  // 6*gamma
  ExtElement g = f.div_radical(2, Rational(2));
  CHECK(g.parity_project() == MultiPoly::constant(vars, Rational(3)));
  SUBCASE("non-divisible element is rejected") {
    ExtElement one = gamma.one_like();
    CHECK_THROWS_AS((void)(one + gamma).div_radical(2, Rational(2)), parity_error);
  }
  SUBCASE("gamma squared reduces to t, so gamma * gamma / gamma recovers gamma * 1") {
    ExtElement t = ExtElement::from_poly(ring, P(vars, "t"));
    CHECK(gamma * gamma == t);
  }
}

TEST_CASE("quadratic extension of the rationals") {
  const Rational d(13);
  QuadExt a(Rational(3), Rational(1), d);   // 3 + sqrt13
  QuadExt b(Rational(3), Rational(-1), d);  // 3 - sqrt13
  CHECK(a * b == QuadExt::rational(Rational(-4), d));  // 9 - 13
  CHECK((a + b) == QuadExt::rational(Rational(6), d));
  CHECK((a - b).div_surd(Rational(2)) == QuadExt::rational(Rational(1), d));
  CHECK_THROWS_AS((void)a.div_surd(Rational(2)), parity_error);
  CHECK_THROWS_AS((void)a.project_rational(), parity_error);
  CHECK((a * b).project_rational() == Rational(-4));
}

TEST_CASE("swap symmetry of the inner series parameters") {
  // coefficients of the (a,b) inner series are symmetric under a <-> b
  auto vars = raw_defect_vars();
  const int K = 8;
  auto one = MultiPoly::constant(vars, Rational(1));
  auto x = PolySeries::monomial_x(K, one);
  auto nx = PolySeries::monomial_x(K, -one);
  MultiPoly a = MultiPoly::variable(vars, "a"), b = MultiPoly::variable(vars, "b");
  PolySeries inner = e_series(9, a, b, x, nx,
                              [&](const MultiPoly& c) { return c.div_exact(a - b); });
  std::map<std::string, MultiPoly> swap{{"a", b}, {"b", a}};
  for (int i = 0; i <= K; ++i)
    CHECK(inner.coeff(i).substitute(swap, vars) == inner.coeff(i));
}

TEST_CASE("series print with polynomial coefficients") {
  auto vars = pq_vars();
  PolySeries f = PolySeries::constant(2, MultiPoly::constant(vars, Rational(1)));
  f.set_coeff(2, P(vars, "1/6*p + 1/6*q"));
  // rendering is delegated to the coefficient ring's canonical text form
  CHECK(f.coeff(2).to_string() == "1/6*p + 1/6*q");
}
