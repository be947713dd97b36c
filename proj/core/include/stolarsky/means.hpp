#pragma once

#include <cstdint>

namespace stolarsky {

enum class MeanFamily { stolarsky, gini };

struct MeanParams {
  MeanFamily family = MeanFamily::stolarsky;
  double p = 0;
  double q = 0;
};

struct SixTuple {
  double a = 0, b = 0, c = 0, d = 0, p = 0, q = 0;
};

/// Two-parameter Stolarsky mean, all six defining branches, dispatched on
/// exact parameter equalities with a series guard near the diagonal x = y.
/// Throws bad_input for nonpositive or non-finite arguments.
double stolarsky_mean(double p, double q, double x, double y);

/// Two-parameter Gini mean (sum form), both branches.
double gini_mean(double p, double q, double x, double y);

double mean_value(const MeanParams& m, double x, double y);

/// The bivariate kernel L: L(u,v) = (e^u - e^v)/(u - v) off the diagonal,
/// L(u,u) = e^u; evaluated through the centered identity
/// L(u,v) = e^{(u+v)/2} * L(d,-d), d = (u-v)/2, with the truncated series for
/// L(d,-d) when |u - v| falls under the guard threshold.
double l_numeric(double u, double v);

/// Truncated approximant: the defining formula with L replaced by its k-term
/// truncation L_k, evaluated literally (no guards, no normalization). Useful
/// only near the diagonal; interior accuracy degrades by design.
double stolarsky_truncated(int k, double p, double q, double x, double y);

/// K(M(x,y), N(x,y)) - K(x,y).
double invariance_residual(const MeanParams& outer, const MeanParams& inner1,
                           const MeanParams& inner2, double x, double y);

/// Monte-Carlo equality test of S_{a,b} and S_{c,d}: true iff the relative
/// deviation stays within tol on every sampled pair (log-uniform over
/// [1e-2, 1e2]^2).
bool stolarsky_equal(double a, double b, double c, double d, int samples, std::uint64_t seed,
                     double tol = 1e-12);

}  // namespace stolarsky
