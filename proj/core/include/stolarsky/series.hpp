#pragma once

#include <concepts>
#include <functional>
#include <string>
#include <vector>

#include "stolarsky/errors.hpp"
#include "stolarsky/rational.hpp"

namespace stolarsky {

/// Requirements on a coefficient ring: a commutative Q-algebra with value
/// semantics. zero_like/one_like create constants of the same ring instance.
template <typename R>
concept CoeffRing = requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.scaled(q) } -> std::convertible_to<R>;
  { a.zero_like() } -> std::convertible_to<R>;
  { a.one_like() } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// Reported by coefficientwise division when a coefficient fails to divide;
/// `order` names the offending power of x.
struct series_division_error : error {
  series_division_error(int order, const std::string& why)
      : error("series division failed at order " + std::to_string(order) + ": " + why),
        order(order) {}
  int order;
};

/// Univariate truncated power series of fixed truncation order K: exactly
/// K+1 coefficients c0..cK; arithmetic never consults orders beyond K.
template <CoeffRing R>
class TruncSeries {
 public:
  TruncSeries(int order, const R& zero)
      : order_(order), c_(static_cast<std::size_t>(order) + 1, zero) {
    if (order < 0) throw error("series order must be nonnegative");
  }
  static TruncSeries zero(int order, const R& proto) { return {order, proto.zero_like()}; }
  static TruncSeries constant(int order, const R& value) {
    TruncSeries s(order, value.zero_like());
    s.c_[0] = value;
    return s;
  }
  /// c * x^1 truncated at `order`.
  static TruncSeries monomial_x(int order, const R& c) {
    TruncSeries s(order, c.zero_like());
    if (order >= 1) s.c_[1] = c;
    return s;
  }

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const R& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  void set_coeff(int i, R v) { c_[static_cast<std::size_t>(i)] = std::move(v); }
  [[nodiscard]] bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r = zero(a.order_, a.c_[0]);
    for (int i = 0; i <= a.order_; ++i) {
      if (a.coeff(i).is_zero()) continue;
      for (int j = 0; i + j <= a.order_; ++j) {
        if (b.coeff(j).is_zero()) continue;
        r.c_[static_cast<std::size_t>(i + j)] =
            r.c_[static_cast<std::size_t>(i + j)] + a.coeff(i) * b.coeff(j);
      }
    }
    return r;
  }

  /// Coefficientwise product with a ring element.
  [[nodiscard]] TruncSeries scaled_ring(const R& c) const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
  }
  [[nodiscard]] TruncSeries scaled(const Rational& q) const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = x.scaled(q);
    return r;
  }

  /// Applies fn to every coefficient; fn(order, coeff) -> coeff.
  template <typename Fn>
  [[nodiscard]] TruncSeries map_coeffs(Fn&& fn) const {
    TruncSeries r = *this;
    for (int i = 0; i <= order_; ++i) r.c_[static_cast<std::size_t>(i)] = fn(i, coeff(i));
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  void check(const TruncSeries& o) const {
    if (order_ != o.order_) throw order_mismatch();
  }
  int order_;
  std::vector<R> c_;
};

/// log f for a series whose constant coefficient is exactly 1, via the
/// truncated composition log(1+u) = sum (-1)^(n+1) u^n / n evaluated by
/// Horner. Throws when the constant coefficient differs from 1.
template <CoeffRing R>
TruncSeries<R> log_unit(const TruncSeries<R>& f) {
  const R one = f.coeff(0).one_like();
  if (!(f.coeff(0) - one).is_zero()) throw error("log_unit: constant coefficient is not 1");
  const int k = f.order();
  TruncSeries<R> u = f;
  u.set_coeff(0, f.coeff(0) - one);
  if (k == 0) return TruncSeries<R>::zero(0, one);
  TruncSeries<R> acc =
      TruncSeries<R>::constant(k, one.scaled(Rational(((k + 1) % 2 == 0) ? 1l : -1l, k)));
  for (int n = k - 1; n >= 1; --n) {
    acc = u * acc;
    R c0 = acc.coeff(0) + one.scaled(Rational(((n + 1) % 2 == 0) ? 1l : -1l, n));
    acc.set_coeff(0, std::move(c0));
  }
  return u * acc;
}

/// Truncated evaluation of L_k(scale_u * g(x), scale_v * h(x)) where
/// L_k(U, V) = sum_{n=1..k} (U^{n-1} + U^{n-2}V + ... + V^{n-1}) / n!,
/// using the recurrence h_m = U h_{m-1} + V^m.
template <CoeffRing R>
TruncSeries<R> compose_L(int k, const R& scale_u, const R& scale_v, const TruncSeries<R>& g,
                         const TruncSeries<R>& h) {
  if (g.order() != h.order()) throw order_mismatch();
  if (k < 1) throw error("compose_L: k must be >= 1");
  const int K = g.order();
  const R one = scale_u.one_like();
  TruncSeries<R> U = g.scaled_ring(scale_u);
  TruncSeries<R> V = h.scaled_ring(scale_v);
  TruncSeries<R> hm = TruncSeries<R>::constant(K, one);
  TruncSeries<R> vpow = TruncSeries<R>::constant(K, one);
  TruncSeries<R> res = hm;  // n = 1 term: h_0 / 1!
  Rational factorial(1);
  for (int m = 1; m < k; ++m) {
    vpow = vpow * V;
    hm = U * hm + vpow;
    factorial *= Rational(static_cast<long>(m) + 1);
    res = res + hm.scaled(reciprocal(factorial));
  }
  return res;
}

/// Coefficientwise exact division wrapper; `divide` is applied per
/// coefficient, and any exception is rethrown as series_division_error with
/// the failing order attached.
template <CoeffRing R, typename Fn>
TruncSeries<R> divide_coeffs(const TruncSeries<R>& f, Fn&& divide) {
  return f.map_coeffs([&](int i, const R& c) -> R {
    try {
      return divide(c);
    } catch (const series_division_error&) {
      throw;
    } catch (const error& e) {
      throw series_division_error(i, e.what());
    }
  });
}

}  // namespace stolarsky
