#include "stolarsky/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace stolarsky {

namespace {
// free-function wrapper: inside member functions the member pow() would hide
// the ADL-found Rational overload
Rational rat_pow(const Rational& base, std::uint32_t e) { return pow(base, static_cast<long>(e)); }
}  // namespace

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (auto e : e_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return Monomial(std::move(r));
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < o.e_[i]) return std::nullopt;
    r[i] = e_[i] - o.e_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::pow(std::uint32_t k) const {
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] * k;
  return Monomial(std::move(r));
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  auto ea = a.exps(), eb = b.exps();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  return false;
}

MultiPoly MultiPoly::zero(VarSetPtr vars) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  return p;
}

MultiPoly MultiPoly::constant(VarSetPtr vars, Rational c) {
  MultiPoly p = zero(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({Monomial::unit(p.vars_->size()), std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::string_view name, std::uint32_t power) {
  auto idx = vars->index_of(name);
  if (!idx) throw error("unknown variable '" + std::string(name) + "'");
  MultiPoly p = zero(std::move(vars));
  std::vector<std::uint32_t> e(p.vars_->size(), 0);
  e[*idx] = power;
  p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
  if (power == 0) p.terms_.back().mono = Monomial::unit(p.vars_->size());
  return p;
}

MultiPoly MultiPoly::from_terms(VarSetPtr vars, std::vector<Term> terms) {
  GrlexGreater gt;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return gt(a.mono, b.mono); });
  MultiPoly p = zero(std::move(vars));
  for (auto& t : terms) {
    if (t.mono.size() != p.vars_->size()) throw error("monomial arity mismatch");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw error("constant_value: polynomial is not constant");
  return terms_[0].coeff;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

bool MultiPoly::contains_var(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.exp(var) > 0; });
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.front().mono.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.total_degree() == d; });
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  GrlexGreater gt;
  MultiPoly r = MultiPoly::zero(a.vars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    if (a.terms_[i].mono == b.terms_[j].mono) {
      Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
      ++i, ++j;
    } else if (gt(a.terms_[i].mono, b.terms_[j].mono)) {
      r.terms_.push_back(a.terms_[i++]);
    } else {
      r.terms_.push_back(b.terms_[j++]);
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_vars(b);
  std::map<Monomial, Rational, GrlexGreater> acc;
  const auto& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const auto& large = a.terms_.size() <= b.terms_.size() ? b : a;
  for (const auto& ta : small.terms_) {
    for (const auto& tb : large.terms_) {
      Monomial m = ta.mono * tb.mono;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), ta.coeff * tb.coeff);
      } else {
        it->second += ta.coeff * tb.coeff;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  MultiPoly r = MultiPoly::zero(a.vars_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back({m, std::move(c)});
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(vars_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return zero(vars_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
  MultiPoly r = one_like();
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_vars(a.vars_, b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw error("leading_term of zero polynomial");
  return terms_.front();
}

std::pair<MultiPoly, MultiPoly> MultiPoly::div_rem(const MultiPoly& den) const {
  check_same_vars(den);
  if (den.is_zero()) throw division_by_zero();
  MultiPoly q = zero(vars_), rem = zero(vars_);
  MultiPoly r = *this;
  const auto& dl = den.leading_term();
  while (!r.is_zero()) {
    const auto& rl = r.leading_term();
    auto m = rl.mono.divide(dl.mono);
    if (!m) {
      // leading term not reducible: it belongs to the remainder
      MultiPoly head = zero(vars_);
      head.terms_.push_back(rl);
      rem += head;
      r -= head;
      continue;
    }
    Rational c = rl.coeff / dl.coeff;
    MultiPoly step = zero(vars_);
    step.terms_.push_back({std::move(*m), std::move(c)});
    q += step;
    r -= step * den;
  }
  return {std::move(q), std::move(rem)};
}

MultiPoly MultiPoly::div_exact(const MultiPoly& den) const {
  auto [q, r] = div_rem(den);
  if (!r.is_zero()) throw inexact_division(std::move(r));
  return q;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings,
                                const VarSetPtr& target) const {
  const std::size_t n = vars_->size();
  // resolve each source variable to a target polynomial
  std::vector<const MultiPoly*> bound(n, nullptr);
  std::vector<MultiPoly> identity;
  identity.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = bindings.find(vars_->name(i));
    if (it != bindings.end()) {
      if (!same_vars(it->second.vars(), target)) throw varset_mismatch();
      bound[i] = &it->second;
    } else if (contains_var(i)) {
      if (!target->index_of(vars_->name(i)))
        throw error("substitute: variable '" + vars_->name(i) + "' unbound and absent from target");
      identity.push_back(variable(target, vars_->name(i)));
      bound[i] = &identity.back();
    }
  }
  // cache powers per variable up to the needed degree
  std::vector<std::vector<MultiPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!bound[i]) continue;
    powers[i].push_back(MultiPoly::constant(target, Rational(1)));
    auto d = degree_in(i);
    for (std::uint32_t k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * *bound[i]);
  }
  MultiPoly out = zero(target);
  for (const auto& t : terms_) {
    MultiPoly term = constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (auto e = t.mono.exp(i); e > 0) term = term * powers[i][e];
    out += term;
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::as_univariate(std::size_t var) const {
  if (terms_.empty()) return {};
  std::vector<MultiPoly> coeffs(degree_in(var) + 1, zero(vars_));
  for (const auto& t : terms_) {
    auto e = t.mono.exp(var);
    std::vector<std::uint32_t> m(t.mono.exps().begin(), t.mono.exps().end());
    m[var] = 0;
    coeffs[e] += from_terms(vars_, {{Monomial(std::move(m)), t.coeff}});
  }
  return coeffs;
}

MultiPoly MultiPoly::from_univariate(const std::vector<MultiPoly>& coeffs, std::size_t var) {
  if (coeffs.empty()) throw error("from_univariate: empty coefficient list");
  MultiPoly out = zero(coeffs[0].vars());
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    std::vector<std::uint32_t> m(out.vars()->size(), 0);
    m[var] = static_cast<std::uint32_t>(e);
    out += coeffs[e].mul_monomial(Monomial(std::move(m)), Rational(1));
  }
  return out;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_->size()) throw error("eval: wrong point arity");
  Rational out(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (auto e = t.mono.exp(i); e > 0) v *= rat_pow(point[i], e);
    out += v;
  }
  return out;
}

Rational MultiPoly::content() const {
  BigInt num(0), den(1);
  for (const auto& t : terms_) {
    num = gcd(num, t.coeff.numerator());
    den = lcm(den, t.coeff.denominator());
  }
  if (num.is_zero()) return Rational(0);
  return Rational(num, den);
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  std::vector<std::uint32_t> mins(terms_.front().mono.exps().begin(),
                                  terms_.front().mono.exps().end());
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < mins.size(); ++i)
      mins[i] = std::min(mins[i], t.mono.exp(i));
  return Monomial(std::move(mins));
}

MultiPoly::Normalized MultiPoly::normalized() const {
  if (terms_.empty()) return {Rational(0), Monomial::unit(vars_ ? vars_->size() : 0), *this};
  Rational c = content();
  if (leading_term().coeff.sign() < 0) c = -c;
  Monomial m = monomial_content();
  MultiPoly core = zero(vars_);
  core.terms_.reserve(terms_.size());
  Rational inv = reciprocal(c);
  for (const auto& t : terms_) core.terms_.push_back({*t.mono.divide(m), t.coeff * inv});
  return {std::move(c), std::move(m), std::move(core)};
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    bool printed_coeff = false;
    if (!c.is_one() || t.mono.is_unit()) {
      os << c.to_string();
      printed_coeff = true;
    }
    bool first_factor = !printed_coeff;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      auto e = t.mono.exp(i);
      if (e == 0) continue;
      if (!first_factor || printed_coeff) os << "*";
      first_factor = false;
      os << vars_->name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
  std::string take_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected digits in '" + std::string(s) + "'");
    return std::string(s.substr(start, pos - start));
  }
  std::string take_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
    }
    if (pos == start) throw parse_error("expected identifier in '" + std::string(s) + "'");
    return std::string(s.substr(start, pos - start));
  }
};

}  // namespace

MultiPoly MultiPoly::parse(VarSetPtr vars, std::string_view text) {
  PolyLexer lx{text};
  std::vector<Term> terms;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (!first || lx.peek() == '+' || lx.peek() == '-') {
      char c = lx.take();
      if (c == '-') {
        sign = -1;
      } else if (c != '+') {
        throw parse_error(std::string("expected sign, got '") + c + "'");
      }
    }
    first = false;
    Rational coeff(sign);
    std::vector<std::uint32_t> exps(vars->size(), 0);
    bool expect_factor = true;
    bool any = false;
    while (expect_factor) {
      if (lx.eof()) break;
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        BigInt num(lx.take_number());
        BigInt den(1l);
        if (!lx.eof() && lx.peek() == '/') {
          lx.take();
          den = BigInt(lx.take_number());
        }
        coeff *= Rational(num, den);
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        auto name = lx.take_ident();
        auto idx = vars->index_of(name);
        if (!idx) throw parse_error("unknown variable '" + name + "'");
        std::uint32_t e = 1;
        if (!lx.eof() && lx.peek() == '^') {
          lx.take();
          e = static_cast<std::uint32_t>(std::stoul(lx.take_number()));
        }
        exps[*idx] += e;
        any = true;
      } else {
        throw parse_error(std::string("unexpected character '") + c + "'");
      }
      expect_factor = false;
      if (!lx.eof() && lx.peek() == '*') {
        lx.take();
        expect_factor = true;
      }
    }
    if (!any) throw parse_error("empty term");
    terms.push_back({Monomial(std::move(exps)), std::move(coeff)});
  }
  if (terms.empty()) throw parse_error("empty polynomial text");
  return from_terms(std::move(vars), std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace stolarsky
