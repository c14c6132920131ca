#include "uqrs/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "uqrs/cyclotomic.hpp"
#include "uqrs/polygcd.hpp"

namespace uqrs {

namespace {

using CycList = std::vector<std::pair<int, int>>;

CycList merge_add(const CycList& a, const CycList& b) {
  std::map<int, int> m;
  for (const auto& [d, e] : a) m[d] += e;
  for (const auto& [d, e] : b) m[d] += e;
  CycList out;
  for (const auto& [d, e] : m)
    if (e > 0) out.emplace_back(d, e);
  return out;
}

/// Divides out as many copies of Phi_d from num as possible, up to the listed multiplicities.
void cancel_cyclotomics(LaurentPoly& num, CycList& cyc) {
  for (auto& [d, e] : cyc) {
    LaurentPoly quotient;
    while (e > 0 && divide_by_cyclotomic(num, d, &quotient)) {
      num = std::move(quotient);
      --e;
    }
  }
  cyc.erase(std::remove_if(cyc.begin(), cyc.end(), [](const auto& de) { return de.second == 0; }), cyc.end());
}

LaurentPoly divide_or_throw(const LaurentPoly& num, const LaurentPoly& den) {
  LaurentPoly quotient;
  if (!divide_exact(num, den, &quotient)) throw ArithmeticError("internal error: expected exact division");
  return quotient;
}

/// Divides by a unit c * p^a * q^b.
LaurentPoly divide_unit(const LaurentPoly& x, const LaurentPoly& unit) {
  const Term& t = unit.terms()[0];
  return x.shifted(-t.ep, -t.eq).scaled(Rational(1) / t.c);
}

/// Upper bound on d with euler_phi(d) <= span (valid far beyond the degrees met here).
int cyclotomic_search_bound(int span) { return 6 * span + 6; }

}  // namespace

Monomial Monomial::inverse() const {
  if (coeff == 0) throw ArithmeticError("inverse of a zero monomial");
  return Monomial{Rational(1) / coeff, -ep, -eq};
}

std::string Monomial::to_string() const { return LaurentPoly::monomial(coeff, ep, eq).to_string(); }

Monomial rs_monomial(const Rational& a, const Rational& b) {
  Rational ea = a * 8;
  Rational eb = b * 8;
  if (!is_integer(ea) || !is_integer(eb)) throw ArithmeticError("power of r, s leaves the 1/8 grid");
  return Monomial{1, static_cast<int>(to_long(ea)), static_cast<int>(to_long(eb))};
}

Monomial monomial_pow(const Monomial& m, const Rational& e) {
  if (m.coeff != 1 && m.coeff != -1) throw ArithmeticError("monomial_pow needs a coefficient of +1 or -1");
  Rational ep = e * m.ep;
  Rational eq = e * m.eq;
  if (!is_integer(ep) || !is_integer(eq)) throw ArithmeticError("monomial power leaves the p, q grid");
  Rational coeff = 1;
  if (m.coeff == -1) {
    if (!is_integer(e)) throw ArithmeticError("fractional power of a negative monomial");
    if (to_long(e) % 2 != 0) coeff = -1;
  }
  return Monomial{coeff, static_cast<int>(to_long(ep)), static_cast<int>(to_long(eq))};
}

Scalar::Scalar(const Rational& c) : num_(c) {}

Scalar::Scalar(const Monomial& m) : num_(LaurentPoly::monomial(m.coeff, m.ep, m.eq)) {}

Scalar::Scalar(const LaurentPoly& num) : num_(num) {}

Scalar Scalar::monomial(const Rational& c, int ep, int eq) { return Scalar(LaurentPoly::monomial(c, ep, eq)); }

Scalar Scalar::over_cyclotomics(const LaurentPoly& num, const std::vector<int>& ds) {
  Scalar out(num);
  std::map<int, int> m;
  for (int d : ds) m[d] += 1;
  for (const auto& [d, e] : m) out.cyc_.emplace_back(d, e);
  out.reduce();
  return out;
}

Scalar Scalar::binomial_ratio(int a, int b) {
  if (b == 0) throw ArithmeticError("division by zero: p^0 - q^0");
  LaurentPoly num = LaurentPoly::monomial(1, a, 0) - LaurentPoly::monomial(1, 0, a);
  if (b < 0) num = num * LaurentPoly::monomial(-1, -b, -b);
  return over_cyclotomics(num, divisors(b < 0 ? -b : b));
}

Monomial Scalar::as_monomial() const {
  if (!is_monomial()) throw ArithmeticError("scalar is not a monomial: " + to_string());
  const Term& t = num_.terms()[0];
  return Monomial{t.c, t.ep, t.eq};
}

LaurentPoly Scalar::expand_cyclotomics(const CycList& cyc) {
  LaurentPoly out(Rational(1));
  for (const auto& [d, e] : cyc) out = out * cyclotomic_form(d).poly.pow(static_cast<unsigned>(e));
  return out;
}

LaurentPoly Scalar::denominator() const { return expand_cyclotomics(cyc_) * gen_; }

void Scalar::reduce() {
  if (num_.is_zero()) {
    cyc_.clear();
    gen_ = LaurentPoly(Rational(1));
    return;
  }
  cancel_cyclotomics(num_, cyc_);
  if (!gen_.is_one()) {
    LaurentPoly g = poly_gcd(num_, gen_);
    if (!g.is_one()) {
      num_ = divide_or_throw(num_, g);
      gen_ = divide_or_throw(gen_, g);
    }
    LaurentPoly unit;
    gen_ = normalize_associate(gen_, &unit);
    num_ = divide_unit(num_, unit);
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar out;
  if (a.cyc_ == b.cyc_ && a.gen_ == b.gen_) {
    out.num_ = a.num_ + b.num_;
    out.cyc_ = a.cyc_;
    out.gen_ = a.gen_;
    out.reduce();
    return out;
  }
  std::map<int, int> need;
  for (const auto& [d, e] : a.cyc_) need[d] = std::max(need[d], e);
  for (const auto& [d, e] : b.cyc_) need[d] = std::max(need[d], e);
  auto missing = [&](const CycList& have) {
    std::map<int, int> h(have.begin(), have.end());
    CycList m;
    for (const auto& [d, e] : need)
      if (e - h[d] > 0) m.emplace_back(d, e - h[d]);
    return m;
  };
  LaurentPoly fa = Scalar::expand_cyclotomics(missing(a.cyc_));
  LaurentPoly fb = Scalar::expand_cyclotomics(missing(b.cyc_));
  LaurentPoly gen(Rational(1));
  if (!a.gen_.is_one() || !b.gen_.is_one()) {
    LaurentPoly g = poly_gcd(a.gen_, b.gen_);
    LaurentPoly ga = divide_or_throw(b.gen_, g);
    LaurentPoly gb = divide_or_throw(a.gen_, g);
    fa = fa * ga;
    fb = fb * gb;
    gen = a.gen_ * ga;
  }
  out.num_ = a.num_ * fa + b.num_ * fb;
  for (const auto& [d, e] : need) out.cyc_.emplace_back(d, e);
  out.gen_ = gen;
  out.reduce();
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  LaurentPoly an = a.num_;
  LaurentPoly bn = b.num_;
  CycList ac = a.cyc_;
  CycList bc = b.cyc_;
  cancel_cyclotomics(an, bc);
  cancel_cyclotomics(bn, ac);
  Scalar out;
  out.num_ = an * bn;
  out.cyc_ = merge_add(ac, bc);
  if (a.gen_.is_one() && b.gen_.is_one()) return out;
  out.gen_ = a.gen_ * b.gen_;
  out.reduce();
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  LaurentPoly unit;
  LaurentPoly rest = normalize_associate(num_, &unit);
  std::map<int, int> found;
  int span = rest.max_ep() - rest.min_ep();
  const int bound = cyclotomic_search_bound(span);
  for (int d = 1; d <= bound && span > 0; ++d) {
    if (euler_phi(d) > span) continue;
    LaurentPoly quotient;
    while (span > 0 && divide_by_cyclotomic(rest, d, &quotient)) {
      rest = std::move(quotient);
      found[d] += 1;
      span = rest.max_ep() - rest.min_ep();
    }
  }
  Scalar out;
  out.num_ = divide_unit(denominator(), unit);
  for (const auto& [d, e] : found) out.cyc_.emplace_back(d, e);
  out.gen_ = rest;
  return out;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(Rational(1));
  Scalar base = *this;
  while (e > 0) {
    if (e & 1L) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Scalar::eval(const Rational& p0, const Rational& q0) const {
  if (p0 == 0 || q0 == 0) throw ArithmeticError("evaluation point must have p0, q0 nonzero");
  Rational den = gen_.eval(p0, q0);
  for (const auto& [d, e] : cyc_) den *= rational_pow(cyclotomic_form(d).poly.eval(p0, q0), e);
  if (den == 0) throw ArithmeticError("pole at the evaluation point (" + p0.get_str() + ", " + q0.get_str() + ")");
  return num_.eval(p0, q0) / den;
}

Scalar Scalar::swapped() const {
  Scalar out;
  out.num_ = num_.swapped();
  out.cyc_ = cyc_;
  for (const auto& [d, e] : cyc_)
    if (d == 1 && e % 2 == 1) out.num_ = -out.num_;
  out.gen_ = gen_.swapped();
  out.reduce();
  return out;
}

Scalar Scalar::normalized() const { return Scalar(num_) / Scalar(denominator()); }

std::size_t Scalar::hash() const {
  std::size_t h = num_.hash();
  for (const auto& [d, e] : cyc_) h = h * 31U + static_cast<std::size_t>(d * 64 + e);
  return h * 131U ^ gen_.hash();
}

std::string Scalar::to_string() const {
  if (cyc_.empty() && gen_.is_one()) return num_.to_string();
  std::ostringstream out;
  out << "(" << num_.to_string() << ")/(";
  bool first = true;
  for (const auto& [d, e] : cyc_) {
    if (!first) out << "*";
    first = false;
    out << "(" << cyclotomic_form(d).poly.to_string() << ")";
    if (e != 1) out << "^" << e;
  }
  if (!gen_.is_one()) {
    if (!first) out << "*";
    out << "(" << gen_.to_string() << ")";
  }
  out << ")";
  return out.str();
}

Scalar qnum(const Rational& x) {
  Rational twice = x * 2;
  if (!is_integer(twice)) throw ArithmeticError("qnum argument must lie on the 1/2 grid");
  const long m = to_long(twice);
  if (m == 0) return Scalar();
  static std::mutex lock;
  static std::map<long, Scalar> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  Scalar value = Scalar::binomial_ratio(static_cast<int>(4 * m), 8);
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(m, std::move(value)).first->second;
}

Scalar qnum_rel(const Rational& k, const Rational& d) {
  if (d <= 0) throw ArithmeticError("qnum_rel needs a positive step");
  Rational a = k * d * 8;
  Rational b = d * 8;
  if (!is_integer(a) || !is_integer(b)) throw ArithmeticError("qnum_rel leaves the 1/8 grid");
  if (a == 0) return Scalar();
  return Scalar::binomial_ratio(static_cast<int>(to_long(a)), static_cast<int>(to_long(b)));
}

}  // namespace uqrs
