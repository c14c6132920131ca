#include "uqrs/polygcd.hpp"

#include <algorithm>
#include <cstdint>

#include "uqrs/modular.hpp"

namespace uqrs {

namespace {

/// Univariate polynomial in q, dense, index = exponent.
using UPoly = std::vector<Rational>;
/// Bivariate polynomial in p over Q[q], dense in p.
using BPoly = std::vector<UPoly>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

/// Quotient and remainder over Q.
void divmod(const UPoly& a, const UPoly& b, UPoly* quo, UPoly* rem) {
  UPoly r = a;
  UPoly q;
  if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
  if (quo) *quo = q;
  if (rem) *rem = r;
}

UPoly monic(UPoly a) {
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

/// Scales to coprime integer coefficients.
UPoly primitive(UPoly a) {
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  if (g == 0) return a;
  Rational factor(l, g);
  factor.canonicalize();
  for (auto& c : a) c *= factor;
  return a;
}

/// Integer pseudo-remainder sequence with primitive parts; the result is monic.
UPoly ugcd(UPoly a, UPoly b) {
  if (a.empty()) return monic(b);
  if (b.empty()) return monic(a);
  a = primitive(a);
  b = primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return UPoly{Rational(1)};
    UPoly r = a;
    while (!r.empty() && r.size() >= b.size()) {
      const std::size_t shift = r.size() - b.size();
      const Rational lr = r.back();
      for (auto& c : r) c *= b.back();
      for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= lr * b[i];
      trim(r);
    }
    a = std::move(b);
    b = primitive(std::move(r));
  }
  return monic(a);
}

constexpr std::uint64_t kGcdPrime = 2305843009213693951ULL;  // 2^61 - 1

using ModPoly = std::vector<std::uint64_t>;

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Degree of gcd(a, b) over Z/P; both inputs nonzero.
std::size_t gcd_degree_mod(ModPoly a, ModPoly b) {
  const std::uint64_t m = kGcdPrime;
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    const std::uint64_t inv = modular::inverse(b.back(), m);
    while (!a.empty() && a.size() >= b.size()) {
      const std::size_t shift = a.size() - b.size();
      const std::uint64_t c = modular::mul(a.back(), inv, m);
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = modular::sub(a[i + shift], modular::mul(c, b[i], m), m);
      trim_mod(a);
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

/// Specializes the second variable (index j) at v; fails when a coefficient or the leading coefficient degenerates.
bool specialize(const std::vector<std::vector<Rational>>& x, std::uint64_t v, ModPoly* out) {
  const std::uint64_t m = kGcdPrime;
  out->assign(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = x[i].size(); j-- > 0;) {
      acc = modular::mul(acc, v, m);
      if (x[i][j] == 0) continue;
      const std::uint64_t c = rational_mod(x[i][j], m);
      if (c == m) return false;
      acc = modular::add(acc, c, m);
    }
    (*out)[i] = acc;
  }
  return !out->empty() && out->back() != 0;
}

std::vector<std::vector<Rational>> transpose(const std::vector<std::vector<Rational>>& x) {
  std::size_t cols = 0;
  for (const auto& row : x) cols = std::max(cols, row.size());
  std::vector<std::vector<Rational>> out(cols, std::vector<Rational>(x.size(), Rational(0)));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j) out[j][i] = x[i][j];
  for (auto& row : out) trim(row);
  return out;
}

/// True when a and b certainly share no factor that involves the first variable.
bool coprime_in_first(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
  if (a.size() <= 1 || b.size() <= 1) return true;
  for (std::uint64_t v : {1234567891ULL, 987654321987ULL, 55555333331ULL}) {
    ModPoly sa;
    ModPoly sb;
    if (!specialize(a, v, &sa) || !specialize(b, v, &sb)) continue;
    return gcd_degree_mod(sa, sb) == 0;
  }
  return false;
}

UPoly content(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? monic(c) : ugcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly divide_content(const BPoly& a, const UPoly& c) {
  BPoly out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].empty()) continue;
    divmod(a[k], c, &out[k], nullptr);
  }
  return out;
}

/// lc(b)^k * a mod b for the appropriate k (pseudo-remainder in p).
BPoly prem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& c : a) c = mul(c, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(la, b[i]));
    trim(a);
  }
  return a;
}

BPoly to_bpoly(const LaurentPoly& x) {
  const int mp = x.min_ep();
  const int mq = x.min_eq();
  BPoly out;
  for (const auto& t : x.terms()) {
    std::size_t i = static_cast<std::size_t>(t.ep - mp);
    std::size_t j = static_cast<std::size_t>(t.eq - mq);
    if (out.size() <= i) out.resize(i + 1);
    if (out[i].size() <= j) out[i].resize(j + 1, Rational(0));
    out[i][j] = t.c;
  }
  for (auto& c : out) trim(c);
  trim(out);
  return out;
}

LaurentPoly from_bpoly(const BPoly& a) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != 0) terms.push_back(Term{static_cast<int>(i), static_cast<int>(j), a[i][j]});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly normalize_associate(const LaurentPoly& x, LaurentPoly* unit) {
  if (x.is_zero()) throw ArithmeticError("cannot normalize the zero polynomial");
  const int mp = x.min_ep();
  const int mq = x.min_eq();
  Rational c = x.content();
  if (x.leading().c < 0) c = -c;
  if (unit) *unit = LaurentPoly::monomial(c, mp, mq);
  return x.shifted(-mp, -mq).scaled(Rational(1) / c);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero()) return normalize_associate(b, nullptr);
  if (b.is_zero()) return normalize_associate(a, nullptr);
  BPoly x = to_bpoly(a);
  BPoly y = to_bpoly(b);
  if (coprime_in_first(x, y) && coprime_in_first(transpose(x), transpose(y))) return LaurentPoly(Rational(1));
  UPoly cx = content(x);
  UPoly cy = content(y);
  UPoly cg = ugcd(cx, cy);
  x = divide_content(x, cx);
  y = divide_content(y, cy);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty() && y.size() > 1) {
    BPoly r = prem(x, y);
    x = std::move(y);
    if (r.empty()) {
      y.clear();
      break;
    }
    y = divide_content(r, content(r));
  }
  BPoly g;
  if (y.empty()) {
    g = x;
  } else {
    // y has p-degree zero: its primitive part is 1.
    g = BPoly{UPoly{Rational(1)}};
  }
  g = divide_content(g, content(g));
  for (auto& coeff : g) coeff = mul(coeff, cg);
  trim(g);
  return normalize_associate(from_bpoly(g), nullptr);
}

}  // namespace uqrs
