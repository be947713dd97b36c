#pragma once

#include <string>

#include "stolarsky/errors.hpp"
#include "stolarsky/rational.hpp"

namespace stolarsky {

/// Element a + b*sqrt(d) of a real quadratic extension of the rationals,
/// d a fixed positive non-square. Used for the concrete outer parameters
/// w +- sqrt(13) in the candidate refutations.
class QuadExt {
 public:
  QuadExt(Rational a, Rational b, Rational d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  static QuadExt rational(Rational a, Rational d) { return {std::move(a), Rational(0), std::move(d)}; }
  static QuadExt surd(Rational d) { return {Rational(0), Rational(1), d}; }

  [[nodiscard]] const Rational& rational_part() const { return a_; }
  [[nodiscard]] const Rational& surd_part() const { return b_; }
  [[nodiscard]] const Rational& radicand() const { return d_; }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  [[nodiscard]] QuadExt zero_like() const { return {Rational(0), Rational(0), d_}; }
  [[nodiscard]] QuadExt one_like() const { return {Rational(1), Rational(0), d_}; }
  [[nodiscard]] QuadExt scaled(const Rational& c) const { return {a_ * c, b_ * c, d_}; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    return {x.a_ * y.a_ + x.d_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_};
  }
  friend QuadExt operator-(const QuadExt& x) { return {-x.a_, -x.b_, x.d_}; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Exact division by denom * sqrt(d); requires the rational part to vanish.
  [[nodiscard]] QuadExt div_surd(const Rational& denom) const {
    if (!a_.is_zero()) throw parity_error("division by surd: rational part is nonzero");
    return {b_ / denom, Rational(0), d_};
  }
  /// The rational part; throws parity_error when the surd part is nonzero.
  [[nodiscard]] Rational project_rational() const {
    if (!b_.is_zero()) throw parity_error("surd part is nonzero: " + b_.to_string());
    return a_;
  }

 private:
  void check(const QuadExt& o) const {
    if (d_ != o.d_) throw error("QuadExt: mixed radicands");
  }
  Rational a_, b_, d_;
};

}  // namespace stolarsky
