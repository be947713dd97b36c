#pragma once

#include <array>
#include <memory>

#include "stolarsky/multipoly.hpp"

namespace stolarsky {

/// Quadratic extension of the polynomial ring by up to three radicals
/// alpha, beta, gamma with alpha^2, beta^2, gamma^2 given as polynomials in
/// the base variables. The parameter substitution a,b = W+V +- alpha,
/// c,d = W-V +- beta, p,q = W +- gamma lives here with alpha^2 = r+s,
/// beta^2 = r-s, gamma^2 = t.
class ExtRing {
 public:
  ExtRing(VarSetPtr vars, std::array<MultiPoly, 3> radicands)
      : vars_(std::move(vars)), radicands_(std::move(radicands)) {}

  /// The ring used by the reparametrized derivation: variables w,v,t,r,s,
  /// radicands r+s, r-s, t.
  static std::shared_ptr<const ExtRing> reparam();

  [[nodiscard]] const VarSetPtr& vars() const { return vars_; }
  [[nodiscard]] const MultiPoly& radicand(int bit) const { return radicands_[static_cast<std::size_t>(bit)]; }

 private:
  VarSetPtr vars_;
  std::array<MultiPoly, 3> radicands_;  // alpha^2, beta^2, gamma^2
};

/// Element sum f_eps * alpha^eps0 * beta^eps1 * gamma^eps2 over eps in {0,1}^3,
/// with squares reduced eagerly, so each of the eight components is a plain
/// polynomial. Component index bit k corresponds to radical k.
class ExtElement {
 public:
  explicit ExtElement(std::shared_ptr<const ExtRing> ring);
  static ExtElement from_poly(std::shared_ptr<const ExtRing> ring, MultiPoly p);
  static ExtElement radical(std::shared_ptr<const ExtRing> ring, int bit);

  [[nodiscard]] const std::shared_ptr<const ExtRing>& ring() const { return ring_; }
  [[nodiscard]] const MultiPoly& component(int eps) const { return comp_[static_cast<std::size_t>(eps)]; }
  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] ExtElement zero_like() const { return ExtElement(ring_); }
  [[nodiscard]] ExtElement one_like() const {
    return from_poly(ring_, MultiPoly::constant(ring_->vars(), Rational(1)));
  }
  [[nodiscard]] ExtElement scaled(const Rational& c) const;

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a);
  friend bool operator==(const ExtElement& a, const ExtElement& b);

  /// The radical-free part; throws parity_error unless all seven radical
  /// components are identically zero.
  [[nodiscard]] MultiPoly parity_project() const;

  /// Exact division by a radical-free polynomial, componentwise.
  [[nodiscard]] ExtElement div_exact_poly(const MultiPoly& g) const;
  /// Exact division by denom * radical(bit). Requires every component with
  /// that radical bit clear to vanish (throws parity_error otherwise).
  [[nodiscard]] ExtElement div_radical(int bit, const Rational& denom) const;

 private:
  std::shared_ptr<const ExtRing> ring_;
  std::array<MultiPoly, 8> comp_;
};

}  // namespace stolarsky
