/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials in the two deformation roots p = r^{1/8}, q = s^{1/8}.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uqrs/rational.hpp"

namespace uqrs {

/// One term c * p^ep * q^eq.
struct Term {
  int ep = 0;
  int eq = 0;
  Rational c;
};

/**
 * @brief Sparse Laurent polynomial over Q in p and q.
 *
 * Terms are kept sorted by (ep, eq) ascending with no zero coefficients, so
 * structural equality is mathematical equality.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  static LaurentPoly monomial(const Rational& c, int ep, int eq);
  /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value (zero when absent).
  Rational constant_term() const;

  int min_ep() const;
  int max_ep() const;
  int min_eq() const;
  int max_eq() const;
  /// Total-degree span: max(ep+eq) and min(ep+eq).
  int max_total() const;
  int min_total() const;
  bool is_homogeneous() const { return is_zero() || max_total() == min_total(); }

  /// Term with the largest (ep, eq).
  const Term& leading() const { return terms_.back(); }

  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int dp, int dq) const;
  /// Substitutes p -> q, q -> p.
  LaurentPoly swapped() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly pow(unsigned e) const;

  bool operator==(const LaurentPoly& other) const;
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }
  /// Total order used for canonical containers.
  bool operator<(const LaurentPoly& other) const;

  /// Exact evaluation at p0, q0 (both nonzero when negative exponents occur).
  Rational eval(const Rational& p0, const Rational& q0) const;
  /// Evaluation modulo a prime; returns P when some coefficient has a denominator divisible by P.
  std::uint64_t eval_mod(std::uint64_t pval, std::uint64_t qval, std::uint64_t prime) const;

  /// Positive rational c such that this / c has coprime integer coefficients.
  Rational content() const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/**
 * @brief Exact division in the Laurent ring.
 *
 * Returns false (leaving quotient untouched) when the divisor does not divide
 * the numerator in Q[p^{+-1}, q^{+-1}].
 */
bool divide_exact(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly* quotient);

}  // namespace uqrs
