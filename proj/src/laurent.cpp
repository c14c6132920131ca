#include "uqrs/laurent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "uqrs/modular.hpp"

namespace uqrs {

namespace {

bool key_less(const Term& a, const Term& b) { return a.ep != b.ep ? a.ep < b.ep : a.eq < b.eq; }
bool key_equal(const Term& a, const Term& b) { return a.ep == b.ep && a.eq == b.eq; }

/// Sorts and merges equal keys, dropping zeros.
void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t j = k + 1;
    Rational sum = std::move(terms[k].c);
    while (j < terms.size() && key_equal(terms[j], terms[k])) {
      sum += terms[j].c;
      ++j;
    }
    if (sum != 0) {
      terms[out].ep = terms[k].ep;
      terms[out].eq = terms[k].eq;
      terms[out].c = std::move(sum);
      ++out;
    }
    k = j;
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.push_back(Term{0, 0, c});
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int ep, int eq) {
  LaurentPoly out;
  if (c != 0) out.terms_.push_back(Term{ep, eq, c});
  return out;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  normalize_terms(terms);
  LaurentPoly out;
  out.terms_ = std::move(terms);
  return out;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].ep == 0 && terms_[0].eq == 0 && terms_[0].c == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].ep == 0 && terms_[0].eq == 0);
}

Rational LaurentPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.ep == 0 && t.eq == 0) return t.c;
  return Rational(0);
}

int LaurentPoly::min_ep() const { return terms_.empty() ? 0 : terms_.front().ep; }
int LaurentPoly::max_ep() const { return terms_.empty() ? 0 : terms_.back().ep; }

int LaurentPoly::min_eq() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.eq < m) m = t.eq;
    first = false;
  }
  return m;
}

int LaurentPoly::max_eq() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.eq > m) m = t.eq;
    first = false;
  }
  return m;
}

int LaurentPoly::max_total() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.ep + t.eq > m) m = t.ep + t.eq;
    first = false;
  }
  return m;
}

int LaurentPoly::min_total() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.ep + t.eq < m) m = t.ep + t.eq;
    first = false;
  }
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.c = -t.c;
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return LaurentPoly();
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.c *= c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int dp, int dq) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) {
    t.ep += dp;
    t.eq += dq;
  }
  return out;
}

LaurentPoly LaurentPoly::swapped() const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) std::swap(t.ep, t.eq);
  return from_terms(std::move(terms));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && key_less(a.terms_[i], b.terms_[j]))) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || key_less(b.terms_[j], a.terms_[i])) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rational sum = a.terms_[i].c + b.terms_[j].c;
      if (sum != 0) out.terms_.push_back(Term{a.terms_[i].ep, a.terms_[i].eq, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

namespace {

/// Integer coefficients of x / content(x), in term order.
std::vector<mpz_class> integer_coefficients(const std::vector<Term>& terms, const Rational& content) {
  std::vector<mpz_class> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Rational q = t.c / content;
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  if (a.is_monomial()) return b.shifted(a.terms_[0].ep, a.terms_[0].eq).scaled(a.terms_[0].c);
  if (b.is_monomial()) return a.shifted(b.terms_[0].ep, b.terms_[0].eq).scaled(b.terms_[0].c);
  const Rational ca = a.content();
  const Rational cb = b.content();
  const Rational scale = ca * cb;
  const std::vector<mpz_class> ia = integer_coefficients(a.terms_, ca);
  const std::vector<mpz_class> ib = integer_coefficients(b.terms_, cb);
  const int p0 = a.min_ep() + b.min_ep();
  const int q0 = a.min_eq() + b.min_eq();
  const long width_p = static_cast<long>(a.max_ep() - a.min_ep() + b.max_ep() - b.min_ep()) + 1;
  const long width_q = static_cast<long>(a.max_eq() - a.min_eq() + b.max_eq() - b.min_eq()) + 1;
  const long box = width_p * width_q;
  const long pairs = static_cast<long>(a.terms_.size() * b.terms_.size());
  LaurentPoly out;
  if (box <= 4 * pairs + 256) {
    std::vector<mpz_class> acc(static_cast<std::size_t>(box));
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const long base_p = a.terms_[i].ep + 0L;
      const long base_q = a.terms_[i].eq + 0L;
      for (std::size_t j = 0; j < b.terms_.size(); ++j) {
        const long idx = (base_p + b.terms_[j].ep - p0) * width_q + (base_q + b.terms_[j].eq - q0);
        mpz_addmul(acc[static_cast<std::size_t>(idx)].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
      }
    }
    for (long idx = 0; idx < box; ++idx) {
      if (acc[static_cast<std::size_t>(idx)] == 0) continue;
      Rational c(acc[static_cast<std::size_t>(idx)]);
      c *= scale;
      out.terms_.push_back(Term{static_cast<int>(idx / width_q) + p0, static_cast<int>(idx % width_q) + q0, std::move(c)});
    }
    return out;
  }
  std::map<std::pair<int, int>, mpz_class> acc;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    for (std::size_t j = 0; j < b.terms_.size(); ++j) {
      mpz_class& slot = acc[{a.terms_[i].ep + b.terms_[j].ep, a.terms_[i].eq + b.terms_[j].eq}];
      mpz_addmul(slot.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  for (auto& [key, value] : acc) {
    if (value == 0) continue;
    Rational c(value);
    c *= scale;
    out.terms_.push_back(Term{key.first, key.second, std::move(c)});
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(Rational(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (!key_equal(terms_[k], other.terms_[k]) || terms_[k].c != other.terms_[k].c) return false;
  }
  return true;
}

bool LaurentPoly::operator<(const LaurentPoly& other) const {
  if (terms_.size() != other.terms_.size()) return terms_.size() < other.terms_.size();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (key_less(terms_[k], other.terms_[k])) return true;
    if (key_less(other.terms_[k], terms_[k])) return false;
    if (terms_[k].c != other.terms_[k].c) return terms_[k].c < other.terms_[k].c;
  }
  return false;
}

Rational LaurentPoly::eval(const Rational& p0, const Rational& q0) const {
  std::unordered_map<int, Rational> pp;
  std::unordered_map<int, Rational> qp;
  auto power = [](std::unordered_map<int, Rational>& cache, const Rational& base, int e) -> const Rational& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, rational_pow(base, e)).first->second;
  };
  Rational sum = 0;
  for (const auto& t : terms_) sum += t.c * power(pp, p0, t.ep) * power(qp, q0, t.eq);
  return sum;
}

std::uint64_t LaurentPoly::eval_mod(std::uint64_t pval, std::uint64_t qval, std::uint64_t prime) const {
  if (terms_.empty()) return 0;
  auto power_table = [&](std::uint64_t base, int lo, int hi) {
    std::vector<std::uint64_t> table(static_cast<std::size_t>(hi - lo + 1));
    std::uint64_t start = lo >= 0 ? modular::pow(base, static_cast<std::uint64_t>(lo), prime)
                                  : modular::pow(modular::inverse(base, prime), static_cast<std::uint64_t>(-static_cast<long>(lo)), prime);
    for (auto& v : table) {
      v = start;
      start = modular::mul(start, base, prime);
    }
    return table;
  };
  const int lp = min_ep();
  const int lq = min_eq();
  const std::vector<std::uint64_t> pp = power_table(pval, lp, max_ep());
  const std::vector<std::uint64_t> qp = power_table(qval, lq, max_eq());
  std::uint64_t sum = 0;
  for (const auto& t : terms_) {
    std::uint64_t c = rational_mod(t.c, prime);
    if (c == prime) return prime;
    std::uint64_t v = modular::mul(c, modular::mul(pp[static_cast<std::size_t>(t.ep - lp)], qp[static_cast<std::size_t>(t.eq - lq)], prime), prime);
    sum = modular::add(sum, v, prime);
  }
  return sum;
}

Rational LaurentPoly::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
  }
  mpz_abs(num_gcd.get_mpz_t(), num_gcd.get_mpz_t());
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003U ^ static_cast<std::size_t>(t.ep * 131 + t.eq);
    h = h * 1000003U ^ static_cast<std::size_t>(mpz_fdiv_ui(t.c.get_num_mpz_t(), 2147483647UL));
    h = h * 1000003U ^ static_cast<std::size_t>(mpz_fdiv_ui(t.c.get_den_mpz_t(), 2147483647UL));
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->c;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (it->ep == 0 && it->eq == 0);
    if (c != 1 || unit) {
      out << c.get_str();
      if (!unit) out << "*";
    }
    bool wrote = false;
    if (it->ep != 0) {
      out << "p";
      if (it->ep != 1) out << "^" << it->ep;
      wrote = true;
    }
    if (it->eq != 0) {
      if (wrote) out << "*";
      out << "q";
      if (it->eq != 1) out << "^" << it->eq;
    }
  }
  return out.str();
}

bool divide_exact(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly* quotient) {
  if (den.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (num.is_zero()) {
    *quotient = LaurentPoly();
    return true;
  }
  if (den.is_monomial()) {
    const Term& t = den.terms()[0];
    *quotient = num.shifted(-t.ep, -t.eq).scaled(Rational(1) / t.c);
    return true;
  }
  // Work in the polynomial ring after removing monomial units; lex order with p > q.
  const int np = num.min_ep();
  const int nq = num.min_eq();
  const int dp = den.min_ep();
  const int dq = den.min_eq();
  std::vector<Term> dterms = den.shifted(-dp, -dq).terms();
  const Term lead = dterms.back();
  using Key = std::pair<int, int>;
  std::map<Key, Rational, std::greater<Key>> rem;
  for (const auto& t : num.terms()) rem.emplace(Key{t.ep - np, t.eq - nq}, t.c);
  std::vector<Term> qterms;
  while (!rem.empty()) {
    auto it = rem.begin();
    const int a = it->first.first - lead.ep;
    const int b = it->first.second - lead.eq;
    if (a < 0 || b < 0) return false;
    Rational qc = it->second / lead.c;
    for (const auto& t : dterms) {
      Key key{a + t.ep, b + t.eq};
      auto found = rem.find(key);
      Rational delta = qc * t.c;
      if (found == rem.end()) {
        rem.emplace(key, -delta);
      } else {
        found->second -= delta;
        if (found->second == 0) rem.erase(found);
      }
    }
    qterms.push_back(Term{a, b, std::move(qc)});
  }
  *quotient = LaurentPoly::from_terms(std::move(qterms)).shifted(np - dp, nq - dq);
  return true;
}

}  // namespace uqrs
