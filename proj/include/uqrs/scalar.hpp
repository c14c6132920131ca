/**
 * @file scalar.hpp
 * @brief Canonical elements of the coefficient field Q(p, q) with p = r^{1/8}, q = s^{1/8}.
 *
 * A Scalar is stored as N / (prod_d Phi_d(p, q)^{e_d} * G) where N is a Laurent
 * polynomial, the Phi_d are homogenized cyclotomic forms and G is a normalized
 * polynomial free of monomial and cyclotomic factors. The fraction is kept
 * reduced, so equality is structural. Every denominator that arises from
 * r, s-numbers lives in the cyclotomic part; G is only populated by division
 * by arbitrary elements and is handled through bivariate gcds.
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "uqrs/laurent.hpp"
#include "uqrs/rational.hpp"

namespace uqrs {

/// coeff * p^ep * q^eq.
struct Monomial {
  Rational coeff = 1;
  int ep = 0;
  int eq = 0;

  bool operator==(const Monomial& o) const { return coeff == o.coeff && ep == o.ep && eq == o.eq; }
  Monomial operator*(const Monomial& o) const { return Monomial{coeff * o.coeff, ep + o.ep, eq + o.eq}; }
  Monomial inverse() const;
  std::string to_string() const;
};

/// r^a s^b as a monomial; a and b must lie on the 1/8 grid.
Monomial rs_monomial(const Rational& a, const Rational& b);

/**
 * @brief Raises a signed unit monomial to a rational power.
 * @throws ArithmeticError when the result leaves the p, q grid or a negative sign meets a fractional power.
 */
Monomial monomial_pow(const Monomial& m, const Rational& e);

class Scalar {
 public:
  /// Zero.
  Scalar() = default;
  explicit Scalar(const Rational& c);
  explicit Scalar(long c) : Scalar(Rational(c)) {}
  explicit Scalar(const Monomial& m);
  explicit Scalar(const LaurentPoly& num);

  static Scalar monomial(const Rational& c, int ep, int eq);
  /// num / (prod of Phi_d over the listed indices, with repetition).
  static Scalar over_cyclotomics(const LaurentPoly& num, const std::vector<int>& ds);
  /// (p^a - q^a) / (p^b - q^b) for b != 0.
  static Scalar binomial_ratio(int a, int b);
  static Scalar r() { return monomial(1, 8, 0); }
  static Scalar s() { return monomial(1, 0, 8); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && cyc_.empty() && gen_.is_one(); }
  /// True when the value is c * p^a * q^b.
  bool is_monomial() const { return num_.is_monomial() && cyc_.empty() && gen_.is_one(); }
  Monomial as_monomial() const;

  const LaurentPoly& numerator() const { return num_; }
  /// Fully expanded denominator polynomial.
  LaurentPoly denominator() const;
  const std::vector<std::pair<int, int>>& cyclotomic_part() const { return cyc_; }
  const LaurentPoly& residual_part() const { return gen_; }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  bool operator==(const Scalar& o) const { return num_ == o.num_ && cyc_ == o.cyc_ && gen_ == o.gen_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /**
   * @brief Exact value at (p0, q0).
   * @throws ArithmeticError at a pole or when p0 or q0 vanishes.
   */
  Rational eval(const Rational& p0, const Rational& q0) const;

  /// The image under p <-> q (equivalently r <-> s).
  Scalar swapped() const;

  /// Recomputes the canonical form from scratch (idempotent on canonical input).
  Scalar normalized() const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  LaurentPoly num_;
  std::vector<std::pair<int, int>> cyc_;        ///< (d, multiplicity), sorted by d
  LaurentPoly gen_ = LaurentPoly(Rational(1));  ///< residual denominator

  void reduce();
  static LaurentPoly expand_cyclotomics(const std::vector<std::pair<int, int>>& cyc);
};

/// [x] = (r^x - s^x)/(r - s) for x on the 1/2 grid.
Scalar qnum(const Rational& x);

/// [k]_d = (r^{kd} - s^{kd})/(r^d - s^d) for d > 0 on the 1/8 grid.
Scalar qnum_rel(const Rational& k, const Rational& d);

/// Shorthand eval(x, p0, q0).
inline Rational eval(const Scalar& x, const Rational& p0, const Rational& q0) { return x.eval(p0, q0); }

}  // namespace uqrs
