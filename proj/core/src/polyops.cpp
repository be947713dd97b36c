#include "stolarsky/polyops.hpp"

#include <algorithm>
#include <array>

namespace stolarsky {

namespace {

using Coeffs = std::vector<MultiPoly>;  // univariate view, index = degree

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  if (b.size() > r.size()) r.resize(b.size(), b[0].zero_like());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Coeffs scale(const Coeffs& a, const MultiPoly& c) {
  Coeffs r = a;
  for (auto& x : r) x = x * c;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b
Coeffs prem_vec(Coeffs a, const Coeffs& b) {
  const MultiPoly& lb = b.back();
  int d = deg(a) - deg(b);
  int steps = 0;
  while (!a.empty() && deg(a) >= deg(b)) {
    MultiPoly la = a.back();
    a = scale(a, lb);
    ++steps;
    int k = deg(a) - deg(b);
    Coeffs shifted(static_cast<std::size_t>(k), la.zero_like());
    for (const auto& c : b) shifted.push_back(c * la);
    a = sub(a, shifted);
  }
  for (int i = 0; i < d + 1 - steps; ++i) a = scale(a, lb);
  return a;
}

Coeffs div_coeffs(const Coeffs& a, const MultiPoly& d) {
  Coeffs r = a;
  for (auto& x : r) x = x.div_exact(d);
  return r;
}

void require_positive_degree(const MultiPoly& p, std::size_t var, const char* side) {
  if (p.is_zero() || p.degree_in(var) == 0)
    throw error(std::string("resultant: ") + side + " operand has degree 0 in the variable");
}

}  // namespace

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  if (b.is_zero()) throw division_by_zero();
  auto av = a.as_univariate(var);
  auto bv = b.as_univariate(var);
  if (av.empty()) return a.zero_like();
  if (deg(av) < deg(bv)) return a;
  auto r = prem_vec(std::move(av), bv);
  if (r.empty()) return a.zero_like();
  return MultiPoly::from_univariate(r, var);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  require_positive_degree(p, var, "left");
  require_positive_degree(q, var, "right");
  Coeffs a = p.as_univariate(var);
  Coeffs b = q.as_univariate(var);
  int sign = 1;
  if (deg(a) < deg(b)) {
    if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
    std::swap(a, b);
  }
  MultiPoly g = p.one_like(), h = p.one_like();
  while (true) {
    int da = deg(a), db = deg(b);
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    Coeffs r = prem_vec(a, b);
    if (r.empty()) return p.zero_like();  // common factor of positive degree
    a = std::move(b);
    MultiPoly div = g * h.pow(static_cast<std::uint32_t>(delta));
    b = div_coeffs(r, div);
    g = a.back();
    if (delta > 0) h = g.pow(static_cast<std::uint32_t>(delta)).div_exact(h.pow(static_cast<std::uint32_t>(delta - 1)));
    if (deg(b) == 0) break;
  }
  int da = deg(a);
  MultiPoly res = b[0].pow(static_cast<std::uint32_t>(da)).div_exact(h.pow(static_cast<std::uint32_t>(da - 1)));
  return sign < 0 ? -res : res;
}

MultiPoly resultant_sylvester(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  require_positive_degree(p, var, "left");
  require_positive_degree(q, var, "right");
  Coeffs a = p.as_univariate(var);
  Coeffs b = q.as_univariate(var);
  const int m = deg(a), n = deg(b);
  const int size = m + n;
  // Sylvester matrix: n rows of a's coefficients, m rows of b's
  std::vector<std::vector<MultiPoly>> mat(
      static_cast<std::size_t>(size),
      std::vector<MultiPoly>(static_cast<std::size_t>(size), p.zero_like()));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) mat[r][r + k] = a[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) mat[n + r][r + k] = b[static_cast<std::size_t>(n - k)];

  // fraction-free Bareiss elimination
  int sign = 1;
  MultiPoly prev = p.one_like();
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < size; ++r)
        if (!mat[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return p.zero_like();
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]).div_exact(prev);
      mat[i][k] = p.zero_like();
    }
    prev = mat[k][k];
  }
  MultiPoly det = mat[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
  return sign < 0 ? -det : det;
}

MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  for (std::size_t i = 0; p.vars() && i < p.vars()->size(); ++i) {
    if (i == var) continue;
    if (p.contains_var(i) || q.contains_var(i))
      throw error("gcd_univariate: extra variable '" + p.vars()->name(i) + "' present");
  }
  auto primitive = [](const MultiPoly& f) {
    if (f.is_zero()) return f;
    auto n = f.normalized();
    return n.core.mul_monomial(n.mono, Rational(1));
  };
  MultiPoly a = primitive(p), b = primitive(q);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(var) == 0) return p.one_like();
    MultiPoly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a);
}

namespace {

constexpr std::array<std::uint64_t, 24> kCertificatePrimes = {
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
    2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
    2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1u;
  }
  return r;
}

/// Reduces a univariate rational-coefficient polynomial mod p. Denominators
/// must be invertible mod p; nullopt when the leading coefficient vanishes.
std::optional<std::vector<std::uint64_t>> reduce_mod(const MultiPoly& f, std::size_t var,
                                                     std::uint64_t p) {
  auto cs = f.as_univariate(var);
  std::vector<std::uint64_t> out(cs.size(), 0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    Rational c = cs[i].constant_value();
    std::uint64_t num = c.numerator().mod_u64(p);
    std::uint64_t den = c.denominator().mod_u64(p);
    if (den == 0) return std::nullopt;
    out[i] = mulmod(num, powmod(den, p - 2, p), p);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  if (out.size() != cs.size()) return std::nullopt;  // leading coefficient vanished
  return out;
}

std::uint64_t resultant_fp(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                           std::uint64_t p) {
  auto degv = [](const std::vector<std::uint64_t>& v) { return static_cast<int>(v.size()) - 1; };
  auto trimv = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  std::uint64_t res = 1;
  if (degv(a) < degv(b)) {
    if ((degv(a) & 1) && (degv(b) & 1)) res = p - res;
    std::swap(a, b);
  }
  while (true) {
    if (b.empty()) return 0;
    if (degv(b) == 0) return mulmod(res, powmod(b[0], static_cast<std::uint64_t>(degv(a)), p), p);
    // r = a mod b over F_p
    std::uint64_t inv = powmod(b.back(), p - 2, p);
    std::vector<std::uint64_t> r = a;
    while (!r.empty() && degv(r) >= degv(b)) {
      std::uint64_t c = mulmod(r.back(), inv, p);
      std::size_t k = r.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t t = mulmod(c, b[i], p);
        r[i + k] = (r[i + k] + p - t) % p;
      }
      trimv(r);
    }
    int da = degv(a), db = degv(b), dr = degv(r);
    res = mulmod(res, powmod(b.back(), static_cast<std::uint64_t>(da - (r.empty() ? 0 : dr)), p), p);
    if ((da & 1) && (db & 1)) res = (res == 0) ? 0 : p - res;
    if (r.empty()) return 0;
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace

std::optional<std::uint64_t> resultant_mod_prime(const MultiPoly& p, const MultiPoly& q,
                                                 std::size_t var, std::uint64_t prime) {
  auto a = reduce_mod(p, var, prime);
  auto b = reduce_mod(q, var, prime);
  if (!a || !b) return std::nullopt;
  return resultant_fp(std::move(*a), std::move(*b), prime);
}

std::string ResultantCertificate::describe() const {
  if (const auto* m = std::get_if<Modular>(&witness)) {
    return "nonzero mod " + std::to_string(m->prime) + " (residue " + std::to_string(m->residue) +
           ")";
  }
  const auto& e = std::get<Exact>(witness);
  return "exact value with " + std::to_string(e.value.digit_count()) + " digits";
}

ResultantCertificate certify_resultant_nonzero(const MultiPoly& p, const MultiPoly& q,
                                               std::size_t var, int prime_budget) {
  int tried = 0;
  for (auto prime : kCertificatePrimes) {
    if (tried >= prime_budget) break;
    auto r = resultant_mod_prime(p, q, var, prime);
    if (!r) continue;  // inadmissible prime (leading coefficient vanished)
    ++tried;
    if (*r != 0) return ResultantCertificate{ResultantCertificate::Modular{prime, *r}};
  }
  throw certificate_exhausted(prime_budget);
}

BigInt resultant_univariate_exact(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  MultiPoly r = resultant(p, q, var);
  if (r.is_zero()) return BigInt(0l);
  Rational c = r.constant_value();
  if (!c.is_integer()) throw error("resultant_univariate_exact: inputs were not integer polynomials");
  return c.numerator();
}

CertifyOrExactResult certify_or_exact(const MultiPoly& p, const MultiPoly& q, std::size_t var,
                                      int prime_budget) {
  CertifyOrExactResult out;
  try {
    out.certificate = certify_resultant_nonzero(p, q, var, prime_budget);
    return out;
  } catch (const certificate_exhausted&) {
  }
  BigInt exact = resultant_univariate_exact(p, q, var);
  if (exact.is_zero()) {
    out.exact_zero_witness = std::move(exact);
  } else {
    out.certificate = ResultantCertificate{ResultantCertificate::Exact{std::move(exact)}};
  }
  return out;
}

}  // namespace stolarsky
