#include <doctest.h>

#include <cmath>

#include "stolarsky/errors.hpp"
#include "stolarsky/means.hpp"
#include "stolarsky/rng.hpp"

using namespace stolarsky;
using doctest::Approx;

TEST_CASE("defining branch values") {
  CHECK(stolarsky_mean(2, 1, 1, 3) == Approx(2.0).epsilon(1e-14));         // arithmetic
  CHECK(stolarsky_mean(3, 3, 5, 5) == 5.0);                                // x = y branch
  CHECK(stolarsky_mean(0, 0, 5, 5) == 5.0);
  CHECK(stolarsky_mean(1, -1, 4, 9) == Approx(6.0).epsilon(1e-14));        // p+q=0: geometric
  CHECK(stolarsky_mean(0, 0, 4, 9) == Approx(6.0).epsilon(1e-14));
  CHECK(stolarsky_mean(1, 0, 1, std::exp(1.0)) ==
        Approx((std::exp(1.0) - 1.0)).epsilon(1e-14));                     // logarithmic mean
  CHECK(stolarsky_mean(-2, -1, 2, 6) == Approx(3.0).epsilon(1e-14));       // harmonic
}

TEST_CASE("gini branch values") {
  CHECK(gini_mean(1, 0, 1, 3) == Approx(2.0).epsilon(1e-14));  // power mean, exponent 1
  CHECK(gini_mean(2, 2, 7, 7) == 7.0);
  CHECK(gini_mean(2, 1, 1, 2) == Approx(5.0 / 3.0).epsilon(1e-14));  // (1+4)/(1+2)
  CHECK(gini_mean(1, -1, 4, 9) == Approx(6.0).epsilon(1e-14));       // p+q=0: geometric
}

TEST_CASE("nonpositive arguments are rejected") {
  CHECK_THROWS_AS((void)stolarsky_mean(2, 1, -1, 3), bad_input);
  CHECK_THROWS_AS((void)stolarsky_mean(2, 1, 1, 0), bad_input);
  CHECK_THROWS_AS((void)gini_mean(2, 1, 0, 3), bad_input);
}

TEST_CASE("kernel values") {
  CHECK(l_numeric(0, 0) == 1.0);
  CHECK(l_numeric(1, 1) == Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(l_numeric(1, 0) == Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
  // centered series region: u, v close together but far from zero
  CHECK(l_numeric(10.0, 10.0 + 1e-9) ==
        Approx(std::exp(10.0 + 0.5e-9)).epsilon(1e-13));
}

TEST_CASE("mean value property on random samples") {
  auto rng = SplitMix64::substream(1, 0);
  for (int i = 0; i < 20000; ++i) {
    double p = rng.uniform(-5, 5), q = rng.uniform(-5, 5);
    double x = rng.log_uniform(1e-2, 1e2), y = rng.log_uniform(1e-2, 1e2);
    double lo = std::min(x, y) * (1 - 1e-12), hi = std::max(x, y) * (1 + 1e-12);
    double s = stolarsky_mean(p, q, x, y);
    double g = gini_mean(p, q, x, y);
    CHECK(s >= lo);
    CHECK(s <= hi);
    CHECK(g >= lo);
    CHECK(g <= hi);
  }
}

TEST_CASE("double symmetry in arguments and parameters") {
  auto rng = SplitMix64::substream(2, 0);
  for (int i = 0; i < 5000; ++i) {
    double p = rng.uniform(-4, 4), q = rng.uniform(-4, 4);
    double x = rng.log_uniform(1e-2, 1e2), y = rng.log_uniform(1e-2, 1e2);
    double s = stolarsky_mean(p, q, x, y);
    CHECK(std::fabs(stolarsky_mean(q, p, x, y) - s) <= 1e-13 * std::fabs(s));
    CHECK(std::fabs(stolarsky_mean(p, q, y, x) - s) <= 1e-13 * std::fabs(s));
  }
}

TEST_CASE("homogeneity") {
  auto rng = SplitMix64::substream(3, 0);
  for (int i = 0; i < 3000; ++i) {
    double p = rng.uniform(-4, 4), q = rng.uniform(-4, 4);
    double x = rng.log_uniform(1e-1, 1e1), y = rng.log_uniform(1e-1, 1e1);
    double lam = rng.log_uniform(1e-3, 1e3);
    double s = stolarsky_mean(p, q, x, y);
    CHECK(std::fabs(stolarsky_mean(p, q, lam * x, lam * y) - lam * s) <= 1e-12 * lam * s);
  }
}

TEST_CASE("branch continuity at q = 0") {
  // evaluation at q = 0 agrees with the limit q -> 0, tightening as q shrinks
  const double p = 2.0, x = 3.0, y = 0.7;
  const double at0 = stolarsky_mean(p, 0, x, y);
  double prev = 1.0;
  for (double q : {1e-5, 1e-6, 1e-7}) {
    double diff = std::fabs(stolarsky_mean(p, q, x, y) - at0) / at0;
    CHECK(diff < 1e-4);
    CHECK(diff < prev);
    prev = diff;
  }
}

TEST_CASE("truncated approximant") {
  SUBCASE("exact at the diagonal point 1") {
    for (int k = 2; k <= 8; ++k) CHECK(stolarsky_truncated(k, 3, 1, 1, 1) == 1.0);
  }
  SUBCASE("tangency near the diagonal") {
    CHECK(std::fabs(stolarsky_truncated(6, 2, 1, 1.0, 1.1) - stolarsky_mean(2, 1, 1.0, 1.1)) <
          1e-6);
  }
  SUBCASE("visible truncation error away from the diagonal") {
    CHECK(std::fabs(stolarsky_truncated(2, 3, 1, 1, 4) - stolarsky_mean(3, 1, 1, 4)) > 1e-3);
  }
  SUBCASE("k below 2 is rejected") {
    CHECK_THROWS_AS((void)stolarsky_truncated(1, 2, 1, 1, 2), bad_input);
  }
}

namespace {

/// Central finite difference of order (i, j) at (1,1) with Richardson
/// extrapolation from steps h and h/2.
template <typename F>
double mixed_partial(F&& f, int i, int j, double h) {
  auto stencil = [&](double step) {
    // binomial central differences in each variable
    auto comb = [](int n, int k) {
      double c = 1;
      for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
      return c;
    };
    double sum = 0;
    for (int a = 0; a <= i; ++a) {
      for (int b = 0; b <= j; ++b) {
        double wgt = comb(i, a) * comb(j, b) * (((a + b) % 2 == 0) ? 1.0 : -1.0);
        double xa = 1.0 + (i / 2.0 - a) * step;
        double yb = 1.0 + (j / 2.0 - b) * step;
        sum += wgt * f(xa, yb);
      }
    }
    return sum / std::pow(step, i + j);
  };
  double d1 = stencil(h), d2 = stencil(h / 2);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

TEST_CASE("derivative agreement of the truncated approximant at the diagonal") {
  // mixed partials at (1,1) of the mean and of its k=6 truncation agree for
  // i, j >= 1 and i + j <= 4
  const double h = 1e-2;
  for (double pq : {0.0}) {
    (void)pq;
    const double p = 3.0, q = 1.0;
    auto full = [&](double x, double y) { return stolarsky_mean(p, q, x, y); };
    auto trunc = [&](double x, double y) { return stolarsky_truncated(6, p, q, x, y); };
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; i + j <= 4; ++j) {
        double df = mixed_partial(full, i, j, h);
        double dt = mixed_partial(trunc, i, j, h);
        CHECK(std::fabs(df - dt) <= 1e-5 * std::max(1.0, std::fabs(df)));
      }
    }
  }
}

TEST_CASE("product identity for p+q = 0 families") {
  auto rng = SplitMix64::substream(4, 0);
  auto max_product_residual = [&](double a, double b, double c, double d) {
    double worst = 0;
    for (int i = 0; i < 400; ++i) {
      double x = rng.log_uniform(1e-2, 1e2), y = rng.log_uniform(1e-2, 1e2);
      double lhs = stolarsky_mean(a, b, x, y) * stolarsky_mean(c, d, x, y);
      worst = std::max(worst, std::fabs(lhs - x * y) / (x * y));
    }
    return worst;
  };
  CHECK(max_product_residual(2, 5, -2, -5) < 1e-12);   // mirrored pair
  CHECK(max_product_residual(1, -1, 2, -2) < 1e-12);   // both geometric
  CHECK(max_product_residual(2, 5, -2, -4) > 1e-3);    // not a family member

  SUBCASE("reciprocal identity on the mirrored family") {
    auto rng2 = SplitMix64::substream(4, 1);
    for (int i = 0; i < 300; ++i) {
      double x = rng2.log_uniform(1e-2, 1e2), y = rng2.log_uniform(1e-2, 1e2);
      double lhs = stolarsky_mean(2, 5, x, y);
      double rhs = 1.0 / stolarsky_mean(-2, -5, 1.0 / x, 1.0 / y);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fabs(lhs));
    }
  }
}

TEST_CASE("equality characterization") {
  CHECK(stolarsky_equal(1, -1, 2, -2, 400, 7));  // both geometric
  CHECK(stolarsky_equal(3, 1, 1, 3, 400, 7));    // parameter symmetry
  CHECK_FALSE(stolarsky_equal(2, 1, 3, 1, 400, 7));
  // spot value backing the negative case: S_{2,1}(1,2) = 1.5 but
  // S_{3,1}(1,2) = sqrt(7/3)
  CHECK(stolarsky_mean(3, 1, 1, 2) == Approx(std::sqrt(7.0 / 3.0)).epsilon(1e-14));
  CHECK(stolarsky_mean(2, 1, 1, 2) == Approx(1.5).epsilon(1e-14));
}

TEST_CASE("classic invariance of the geometric mean") {
  MeanParams g{MeanFamily::stolarsky, 1, -1};   // geometric
  MeanParams a{MeanFamily::stolarsky, 2, 1};    // arithmetic
  MeanParams h{MeanFamily::stolarsky, -2, -1};  // harmonic
  auto rng = SplitMix64::substream(5, 0);
  for (int i = 0; i < 500; ++i) {
    double x = rng.log_uniform(1e-2, 1e2), y = rng.log_uniform(1e-2, 1e2);
    double res = invariance_residual(g, a, h, x, y);
    CHECK(std::fabs(res) <= 1e-12 * std::sqrt(x * y));
  }
}

TEST_CASE("identical-family invariance residual vanishes") {
  MeanParams m{MeanFamily::stolarsky, 3, 1};
  CHECK(invariance_residual(m, m, m, 2, 5) == 0.0);
}

TEST_CASE("refuted candidate has a visibly nonzero residual") {
  const double s13 = std::sqrt(13.0);
  MeanParams outer{MeanFamily::stolarsky, 3 + s13, 3 - s13};
  MeanParams in1{MeanFamily::stolarsky, 7, 5};
  MeanParams in2{MeanFamily::stolarsky, 1, -1};
  double x = std::exp(1.0), y = std::exp(-1.0);
  double res = invariance_residual(outer, in1, in2, x, y);
  CHECK(std::fabs(res) > 1e-6);
  // sign and scale consistent with a defect series whose leading terms are
  // 64/175 x^8 - 12352/5775 x^10 + ... in log coordinates: at x = 1 the
  // E-space defect is O(0.01), so the mean-space residual is K * (e^F - 1)
  double k = mean_value(outer, x, y);
  CHECK(std::fabs(res) < 0.1 * k);
}

TEST_CASE("gini invariance of the classic power-mean family") {
  // {a,b} = {u+v, v}, {c,d} = {u-v, -v}, outer the power mean of exponent u
  MeanParams outer{MeanFamily::gini, 2, 0};
  MeanParams in1{MeanFamily::gini, 3, 1};
  MeanParams in2{MeanFamily::gini, 1, -1};
  auto rng = SplitMix64::substream(6, 0);
  for (int i = 0; i < 500; ++i) {
    double x = rng.log_uniform(1e-2, 1e2), y = rng.log_uniform(1e-2, 1e2);
    double k = gini_mean(2, 0, x, y);
    CHECK(std::fabs(invariance_residual(outer, in1, in2, x, y)) <= 1e-12 * k);
  }
}
