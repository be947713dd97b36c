#include "stolarsky/ext_ring.hpp"

namespace stolarsky {

std::shared_ptr<const ExtRing> ExtRing::reparam() {
  auto vars = VarSet::make({"w", "v", "t", "r", "s"});
  MultiPoly r = MultiPoly::variable(vars, "r");
  MultiPoly s = MultiPoly::variable(vars, "s");
  MultiPoly t = MultiPoly::variable(vars, "t");
  return std::make_shared<const ExtRing>(vars,
                                         std::array<MultiPoly, 3>{r + s, r - s, t});
}

ExtElement::ExtElement(std::shared_ptr<const ExtRing> ring) : ring_(std::move(ring)) {
  for (auto& c : comp_) c = MultiPoly::zero(ring_->vars());
}

ExtElement ExtElement::from_poly(std::shared_ptr<const ExtRing> ring, MultiPoly p) {
  ExtElement e(std::move(ring));
  e.comp_[0] = std::move(p);
  return e;
}

ExtElement ExtElement::radical(std::shared_ptr<const ExtRing> ring, int bit) {
  ExtElement e(ring);
  e.comp_[static_cast<std::size_t>(1 << bit)] = MultiPoly::constant(ring->vars(), Rational(1));
  return e;
}

bool ExtElement::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

ExtElement ExtElement::scaled(const Rational& c) const {
  ExtElement r(ring_);
  for (int i = 0; i < 8; ++i) r.comp_[i] = comp_[i].scaled(c);
  return r;
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  ExtElement r(a.ring_);
  for (int i = 0; i < 8; ++i) r.comp_[i] = a.comp_[i] + b.comp_[i];
  return r;
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  ExtElement r(a.ring_);
  for (int i = 0; i < 8; ++i) r.comp_[i] = a.comp_[i] - b.comp_[i];
  return r;
}

ExtElement operator-(const ExtElement& a) {
  ExtElement r(a.ring_);
  for (int i = 0; i < 8; ++i) r.comp_[i] = -a.comp_[i];
  return r;
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  ExtElement r(a.ring_);
  for (int i = 0; i < 8; ++i) {
    if (a.comp_[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.comp_[j].is_zero()) continue;
      MultiPoly p = a.comp_[i] * b.comp_[j];
      for (int bit = 0; bit < 3; ++bit)
        if (((i >> bit) & 1) && ((j >> bit) & 1)) p = p * a.ring_->radicand(bit);
      r.comp_[i ^ j] += p;
    }
  }
  return r;
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  for (int i = 0; i < 8; ++i)
    if (a.comp_[i] != b.comp_[i]) return false;
  return true;
}

MultiPoly ExtElement::parity_project() const {
  for (int i = 1; i < 8; ++i)
    if (!comp_[i].is_zero())
      throw parity_error("radical component " + std::to_string(i) + " is nonzero: " +
                         comp_[i].to_string());
  return comp_[0];
}

ExtElement ExtElement::div_exact_poly(const MultiPoly& g) const {
  ExtElement r(ring_);
  for (int i = 0; i < 8; ++i)
    if (!comp_[i].is_zero()) r.comp_[static_cast<std::size_t>(i)] = comp_[i].div_exact(g);
  return r;
}

ExtElement ExtElement::div_radical(int bit, const Rational& denom) const {
  if (denom.is_zero()) throw division_by_zero();
  ExtElement r(ring_);
  Rational inv = reciprocal(denom);
  for (int i = 0; i < 8; ++i) {
    if (((i >> bit) & 1) == 0) {
      if (!comp_[i].is_zero())
        throw parity_error("division by radical " + std::to_string(bit) +
                           ": component without the radical is nonzero");
    } else {
      r.comp_[static_cast<std::size_t>(i ^ (1 << bit))] = comp_[i].scaled(inv);
    }
  }
  return r;
}

}  // namespace stolarsky
