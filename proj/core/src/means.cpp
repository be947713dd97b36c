#include "stolarsky/means.hpp"

#include <cmath>
#include <vector>

#include "stolarsky/errors.hpp"
#include "stolarsky/rng.hpp"

namespace stolarsky {

namespace {

// |u - v| threshold under which the closed forms cancel catastrophically and
// the k=12 truncated series takes over (series remainder < 1e-16 there).
constexpr double kDiagonalGuard = 1e-3;

void check_args(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
    throw bad_input("mean arguments must be positive finite reals");
}

/// sinh(z)/z via the even series 1 + z^2/3! + z^4/5! + ..., truncated with the
/// n <= 12 terms of the L-truncation. Valid under the guard.
double sinhc_series(double z) {
  const double z2 = z * z;
  // Horner over z^2: 1/1! + z^2/3! + z^4/5! + z^6/7! + z^8/9! + z^10/11!
  double acc = 1.0 / 39916800.0;
  acc = acc * z2 + 1.0 / 362880.0;
  acc = acc * z2 + 1.0 / 5040.0;
  acc = acc * z2 + 1.0 / 120.0;
  acc = acc * z2 + 1.0 / 6.0;
  return acc * z2 + 1.0;
}

/// log(sinh(z)/z), even in z, zero at z = 0.
double log_sinhc(double z) {
  z = std::fabs(z);
  if (2.0 * z < kDiagonalGuard) return std::log1p(sinhc_series(z) - 1.0);
  if (z > 20.0) return z - std::log(2.0 * z) + std::log1p(-std::exp(-2.0 * z));
  return std::log(std::sinh(z) / z);
}

/// log(cosh(z)), even in z.
double log_cosh(double z) {
  z = std::fabs(z);
  if (z > 20.0) return z - std::log(2.0) + std::log1p(std::exp(-2.0 * z));
  return std::log(std::cosh(z));
}

/// z*coth(z) - 1, even in z, ~ z^2/3 near zero.
double zcoth_minus_one(double z) {
  const double az = std::fabs(z);
  if (2.0 * az < kDiagonalGuard) {
    const double z2 = z * z;
    // z*coth(z) - 1 = z^2/3 - z^4/45 + 2 z^6/945 - z^8/4725 + ...
    return z2 * (1.0 / 3.0 + z2 * (-1.0 / 45.0 + z2 * (2.0 / 945.0 - z2 / 4725.0)));
  }
  return z / std::tanh(z) - 1.0;
}

}  // namespace

double stolarsky_mean(double p, double q, double x, double y) {
  check_args(x, y);
  if (x == y) return x;
  const double lambda = std::sqrt(x) * std::sqrt(y);  // geometric midpoint
  const double e = 0.5 * (std::log(x) - std::log(y));
  // S_{p,q}(x,y) = lambda * S_{p,q}(e^e, e^-e) by homogeneity; in these
  // normalized coordinates L(c*log x', c*log y') = sinh(c*e)/(c*e).
  if (p == 0.0 && q == 0.0) return lambda;
  if (p == q) {
    // exp(-1/p + (x^p log x - y^p log y)/(x^p - y^p)) = lambda * exp((z coth z - 1)/p)
    return lambda * std::exp(zcoth_minus_one(p * e) / p);
  }
  if (q == 0.0) return lambda * std::exp(log_sinhc(p * e) / p);
  if (p == 0.0) return lambda * std::exp(log_sinhc(q * e) / q);
  return lambda * std::exp((log_sinhc(p * e) - log_sinhc(q * e)) / (p - q));
}

double gini_mean(double p, double q, double x, double y) {
  check_args(x, y);
  if (x == y) return x;
  const double lambda = std::sqrt(x) * std::sqrt(y);
  const double e = 0.5 * (std::log(x) - std::log(y));
  // (x^p + y^p)/(x^q + y^q) = cosh(p e)/cosh(q e) in normalized coordinates
  if (p == q) return lambda * std::exp(e * std::tanh(p * e));
  return lambda * std::exp((log_cosh(p * e) - log_cosh(q * e)) / (p - q));
}

double mean_value(const MeanParams& m, double x, double y) {
  return m.family == MeanFamily::stolarsky ? stolarsky_mean(m.p, m.q, x, y)
                                           : gini_mean(m.p, m.q, x, y);
}

double l_numeric(double u, double v) {
  const double mid = 0.5 * (u + v);
  const double d = 0.5 * (u - v);
  if (u == v) return std::exp(u);
  const double scale = std::exp(mid);
  if (std::fabs(u - v) < kDiagonalGuard) return scale * sinhc_series(d);
  return scale * (std::sinh(d) / d);
}

namespace {

double l_truncated(int k, double u, double v) {
  // h_m = u h_{m-1} + v^m; L_k = sum_{n=1..k} h_{n-1}/n!
  double hm = 1.0, vpow = 1.0, fact = 1.0, sum = 1.0;
  for (int m = 1; m < k; ++m) {
    vpow *= v;
    hm = u * hm + vpow;
    fact *= static_cast<double>(m + 1);
    sum += hm / fact;
  }
  return sum;
}

double l_truncated_d1(int k, double u, double v) {
  // d/du sum_{n} h_{n-1}(u,v)/n!, h_m = sum_{i+j=m} u^i v^j
  double sum = 0.0, fact = 1.0;
  for (int n = 2; n <= k; ++n) {
    fact *= static_cast<double>(n);
    double term = 0.0;
    for (int i = 1; i <= n - 1; ++i)
      term += static_cast<double>(i) * std::pow(u, i - 1) * std::pow(v, n - 1 - i);
    sum += term / fact;
  }
  return sum;
}

}  // namespace

double stolarsky_truncated(int k, double p, double q, double x, double y) {
  if (k < 2) throw bad_input("truncated mean needs k >= 2");
  check_args(x, y);
  const double lx = std::log(x), ly = std::log(y);
  if (p == q) {
    const double lk = l_truncated(k, p * lx, p * ly);
    const double d1 = l_truncated_d1(k, p * lx, p * ly);
    const double d2 = l_truncated_d1(k, p * ly, p * lx);
    return std::exp((d1 * lx + d2 * ly) / lk);
  }
  const double num = l_truncated(k, p * lx, p * ly);
  const double den = l_truncated(k, q * lx, q * ly);
  return std::pow(num / den, 1.0 / (p - q));
}

double invariance_residual(const MeanParams& outer, const MeanParams& inner1,
                           const MeanParams& inner2, double x, double y) {
  const double m = mean_value(inner1, x, y);
  const double n = mean_value(inner2, x, y);
  return mean_value(outer, m, n) - mean_value(outer, x, y);
}

bool stolarsky_equal(double a, double b, double c, double d, int samples, std::uint64_t seed,
                     double tol) {
  if (samples < 1) throw bad_input("samples must be >= 1");
  auto rng = SplitMix64::substream(seed, 0);
  for (int i = 0; i < samples; ++i) {
    const double x = rng.log_uniform(1e-2, 1e2);
    const double y = rng.log_uniform(1e-2, 1e2);
    const double s1 = stolarsky_mean(a, b, x, y);
    const double s2 = stolarsky_mean(c, d, x, y);
    if (std::fabs(s1 - s2) > tol * std::fabs(s1)) return false;
  }
  return true;
}

}  // namespace stolarsky
