/**
 * @file series.hpp
 * @brief Truncated formal series in one variable z with Scalar coefficients, the
 * deformed binomial (1 - cz)^a_{r,s} and checks of the binomial product identities.
 */
#pragma once

#include <array>
#include <map>
#include <string>

#include "uqrs/report.hpp"
#include "uqrs/scalar.hpp"

namespace uqrs {

/**
 * @brief Formal Laurent series known exactly up to z^order.
 *
 * Coefficients of exponents above the order are unknown rather than zero.
 */
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : order_(order) {}
  /// The constant c, known to the given order.
  static TruncatedSeries constant(const Scalar& c, int order);
  /// A polynomial in z, exact, presented to the given order.
  static TruncatedSeries polynomial(const std::map<int, Scalar>& coeffs, int order);

  int order() const { return order_; }
  const std::map<int, Scalar>& coefficients() const { return coeffs_; }
  Scalar coeff(int e) const;
  void set(int e, const Scalar& c);
  /// Lowest exponent with a nonzero coefficient (order + 1 when none is known).
  int valuation() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;
  TruncatedSeries scaled(const Scalar& c) const;

  /// Multiplicative inverse of a power series with nonzero constant term.
  TruncatedSeries inverse() const;

  /// Equality of all coefficients up to the smaller of the two orders.
  bool agrees_with(const TruncatedSeries& other) const;

  std::string to_string() const;

 private:
  std::map<int, Scalar> coeffs_;
  int order_;
};

/**
 * @brief sum_{k >= 0} A^k / k! truncated at min(N, order of A).
 * @throws ArithmeticError when A has a nonzero constant term or negative exponents.
 */
TruncatedSeries exp_series(const TruncatedSeries& a, int N);

/// (1 - cz)^a_{r,s} = exp(-sum_{n=1}^N [an]/(n[n]) c^n z^n) for a on the 1/2 grid.
TruncatedSeries deformed_binomial(const Scalar& c, const Rational& a, int N);

/// Geometric series 1/(1 - cz) to order N.
TruncatedSeries geometric(const Scalar& c, int N);

/// Checks the closed forms of (1 - z)^{+-1}_{r,s} and the five binomial product identities to order N.
RelationReport check_binomial_identities(int N);

/// Sparse polynomial in three commuting variables (z1, z2, w) with Scalar coefficients.
class Poly3 {
 public:
  using Key = std::array<int, 3>;
  Poly3() = default;
  static Poly3 variable(int index);
  static Poly3 constant(const Scalar& c);

  friend Poly3 operator+(const Poly3& a, const Poly3& b);
  friend Poly3 operator-(const Poly3& a, const Poly3& b);
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  bool operator==(const Poly3& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

 private:
  std::map<Key, Scalar> terms_;
  void add_term(const Key& k, const Scalar& c);
};

/**
 * @brief Checks (z1-tw)(z2-tw) + (t+1/t)(z1-tw)(w-tz2) + (w-tz1)(w-tz2) = (1/t-t) w (z1 - t^2 z2).
 * @throws ArithmeticError when t = 0.
 */
bool check_quadratic_identity(const Scalar& t);

}  // namespace uqrs
