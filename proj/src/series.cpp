#include "uqrs/series.hpp"

#include <algorithm>
#include <sstream>

namespace uqrs {

TruncatedSeries TruncatedSeries::constant(const Scalar& c, int order) {
  TruncatedSeries out(order);
  out.set(0, c);
  return out;
}

TruncatedSeries TruncatedSeries::polynomial(const std::map<int, Scalar>& coeffs, int order) {
  TruncatedSeries out(order);
  for (const auto& [e, c] : coeffs)
    if (e <= order) out.set(e, c);
  return out;
}

Scalar TruncatedSeries::coeff(int e) const {
  if (e > order_) throw ArithmeticError("coefficient beyond the truncation order");
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void TruncatedSeries::set(int e, const Scalar& c) {
  if (e > order_) return;
  if (c.is_zero()) {
    coeffs_.erase(e);
  } else {
    coeffs_[e] = c;
  }
}

int TruncatedSeries::valuation() const { return coeffs_.empty() ? order_ + 1 : coeffs_.begin()->first; }

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  for (const auto& [e, c] : a.coeffs_)
    if (e <= out.order_) out.coeffs_[e] = c;
  for (const auto& [e, c] : b.coeffs_)
    if (e <= out.order_) out.set(e, out.coeff(e) + c);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& c) const {
  TruncatedSeries out(order_);
  for (const auto& [e, x] : coeffs_) out.set(e, x * c);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int va = std::min(a.valuation(), a.order_);
  const int vb = std::min(b.valuation(), b.order_);
  TruncatedSeries out(std::min(a.order_ + vb, b.order_ + va));
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      if (ea + eb > out.order_) break;
      out.set(ea + eb, out.coeff(ea + eb) + ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (valuation() < 0) throw ArithmeticError("series inverse needs a power series");
  const Scalar c0 = coeff(0);
  if (c0.is_zero()) throw ArithmeticError("series inverse needs a nonzero constant term");
  const Scalar inv0 = c0.inverse();
  TruncatedSeries out(order_);
  out.set(0, inv0);
  for (int n = 1; n <= order_; ++n) {
    Scalar acc;
    for (const auto& [e, c] : coeffs_) {
      if (e == 0) continue;
      if (e > n) break;
      acc += c * out.coeff(n - e);
    }
    out.set(n, -acc * inv0);
  }
  return out;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other) const {
  const int order = std::min(order_, other.order_);
  for (const auto& [e, c] : coeffs_)
    if (e <= order && other.coeff(e) != c) return false;
  for (const auto& [e, c] : other.coeffs_)
    if (e <= order && coeff(e) != c) return false;
  return true;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    if (e != 0) out << "*z^" << e;
  }
  if (first) out << "0";
  out << " + O(z^" << order_ + 1 << ")";
  return out.str();
}

TruncatedSeries exp_series(const TruncatedSeries& a, int N) {
  if (a.valuation() < 1 && !a.coefficients().empty()) {
    throw ArithmeticError("exp_series needs a series without constant or negative-power terms");
  }
  const int order = std::min(N, a.order());
  TruncatedSeries out(order);
  out.set(0, Scalar(1L));
  // n E_n = sum_{k=1}^{n} k A_k E_{n-k}, from E' = A' E.
  for (int n = 1; n <= order; ++n) {
    Scalar acc;
    for (const auto& [k, ak] : a.coefficients()) {
      if (k > n) break;
      acc += Scalar(static_cast<long>(k)) * ak * out.coeff(n - k);
    }
    out.set(n, acc / Scalar(static_cast<long>(n)));
  }
  return out;
}

TruncatedSeries deformed_binomial(const Scalar& c, const Rational& a, int N) {
  TruncatedSeries exponent(N);
  Scalar cn(1L);
  for (int n = 1; n <= N; ++n) {
    cn *= c;
    Scalar term = qnum(a * n) / (Scalar(static_cast<long>(n)) * qnum(n));
    exponent.set(n, -term * cn);
  }
  return exp_series(exponent, N);
}

TruncatedSeries geometric(const Scalar& c, int N) {
  TruncatedSeries out(N);
  Scalar cn(1L);
  for (int n = 0; n <= N; ++n) {
    out.set(n, cn);
    cn *= c;
  }
  return out;
}

namespace {

Scalar rs_pow(const Rational& a, const Rational& b) { return Scalar(rs_monomial(a, b)); }

TruncatedSeries linear(const Scalar& c, int N) {
  return TruncatedSeries::polynomial({{0, Scalar(1L)}, {1, -c}}, N);
}

void record(RelationReport& report, const std::string& name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const bool ok = lhs.agrees_with(rhs);
  report.add(name, ok, ok ? std::string{} : "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string());
}

}  // namespace

RelationReport check_binomial_identities(int N) {
  if (N < 1) throw ArithmeticError("truncation order must be positive");
  RelationReport report;
  report.suite = "series";
  report.window = "order " + std::to_string(N) + ", symbolic";
  const Scalar one(1L);
  const Rational half(1, 2);

  record(report, "(1-z)^1 is 1-z", deformed_binomial(one, 1, N), linear(one, N));
  record(report, "(1-z)^-1 is 1/(1-z/(rs))", deformed_binomial(one, -1, N), geometric(rs_pow(-1, -1), N));

  // (1-(rs)^{3/4}z)^{-1/2} (1-(rs)^{3/4}(s/r)^{1/2}z)^{-1/2} = 1/(1-(s/r)^{1/4}z)
  {
    TruncatedSeries lhs = deformed_binomial(rs_pow(Rational(3, 4), Rational(3, 4)), -half, N) *
                          deformed_binomial(rs_pow(Rational(1, 4), Rational(5, 4)), -half, N);
    record(report, "product of two -1/2 powers is a simple pole", lhs, geometric(rs_pow(Rational(-1, 4), Rational(1, 4)), N));
  }
  // (1-(rs)^{1/4}(r/s)^{1/2}z)^{1/2} (1-(rs)^{3/4}(s/r)^{1/2}z)^{-1/2} = (1-(r/s)^{1/4}z)/(1-(s/r)^{1/4}z)
  {
    TruncatedSeries lhs = deformed_binomial(rs_pow(Rational(3, 4), Rational(-1, 4)), half, N) *
                          deformed_binomial(rs_pow(Rational(1, 4), Rational(5, 4)), -half, N);
    TruncatedSeries rhs = linear(rs_pow(Rational(1, 4), Rational(-1, 4)), N) * geometric(rs_pow(Rational(-1, 4), Rational(1, 4)), N);
    record(report, "mixed +-1/2 powers give a ratio of linear factors", lhs, rhs);
  }
  // (1-(rs)^{1/4}a z)^{1/2} (1-(rs)^{3/4}a z)^{-1/2} = 1 for a in a sample of monomials
  {
    const Monomial samples[] = {Monomial{1, 0, 0}, rs_monomial(half, -half), rs_monomial(-half, half), rs_monomial(-1, 0),
                                rs_monomial(Rational(1, 4), Rational(1, 8)), Monomial{Rational(3, 2), 0, 0}};
    for (const auto& a : samples) {
      Scalar av(a);
      TruncatedSeries lhs = deformed_binomial(rs_pow(Rational(1, 4), Rational(1, 4)) * av, half, N) *
                            deformed_binomial(rs_pow(Rational(3, 4), Rational(3, 4)) * av, -half, N);
      record(report, "cancelling pair with a = " + av.to_string(), lhs, TruncatedSeries::constant(one, N));
    }
  }
  // (1-(rs)^{-1/4}z)^{1/2} (1-(rs)^{1/4}s^{-1}z)^{1/2} = 1-(rs)^{-1/4}s^{-1/2}z
  {
    TruncatedSeries lhs = deformed_binomial(rs_pow(Rational(-1, 4), Rational(-1, 4)), half, N) *
                          deformed_binomial(rs_pow(Rational(1, 4), Rational(-3, 4)), half, N);
    record(report, "two +1/2 powers collapse (s-side)", lhs, linear(rs_pow(Rational(-1, 4), Rational(-3, 4)), N));
  }
  // (1-(rs)^{-1/4}z)^{1/2} (1-(rs)^{1/4}r^{-1}z)^{1/2} = 1-(rs)^{-1/4}r^{-1/2}z
  {
    TruncatedSeries lhs = deformed_binomial(rs_pow(Rational(-1, 4), Rational(-1, 4)), half, N) *
                          deformed_binomial(rs_pow(Rational(-3, 4), Rational(1, 4)), half, N);
    record(report, "two +1/2 powers collapse (r-side)", lhs, linear(rs_pow(Rational(-3, 4), Rational(-1, 4)), N));
  }
  return report;
}

Poly3 Poly3::variable(int index) {
  Poly3 out;
  Key k{0, 0, 0};
  k.at(static_cast<std::size_t>(index)) = 1;
  out.terms_[k] = Scalar(1L);
  return out;
}

Poly3 Poly3::constant(const Scalar& c) {
  Poly3 out;
  if (!c.is_zero()) out.terms_[Key{0, 0, 0}] = c;
  return out;
}

void Poly3::add_term(const Key& k, const Scalar& c) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
  Poly3 out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
  Poly3 out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(Poly3::Key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
  return out;
}

std::string Poly3::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*z1^" << k[0] << "*z2^" << k[1] << "*w^" << k[2];
  }
  return out.str();
}

bool check_quadratic_identity(const Scalar& t) {
  if (t.is_zero()) throw ArithmeticError("identity needs t != 0");
  const Poly3 z1 = Poly3::variable(0);
  const Poly3 z2 = Poly3::variable(1);
  const Poly3 w = Poly3::variable(2);
  const Poly3 T = Poly3::constant(t);
  const Poly3 Tinv = Poly3::constant(t.inverse());
  const Poly3 lhs = (z1 - T * w) * (z2 - T * w) + (T + Tinv) * (z1 - T * w) * (w - T * z2) + (w - T * z1) * (w - T * z2);
  const Poly3 rhs = (Tinv - T) * w * (z1 - T * T * z2);
  return lhs == rhs;
}

}  // namespace uqrs
