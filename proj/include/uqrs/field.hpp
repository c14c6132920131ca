/**
 * @file field.hpp
 * @brief Coefficient-field policies for the operator engine: exact symbolic
 * scalars in Q(p, q), or exact rationals obtained by evaluating at a point.
 */
#pragma once

#include <string>
#include <vector>

#include "uqrs/scalar.hpp"

namespace uqrs {

inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }
inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }
inline Scalar invert_value(const Scalar& x) { return x.inverse(); }
inline Rational invert_value(const Rational& x) { return Rational(1) / x; }
inline std::string value_to_string(const Scalar& x) { return x.to_string(); }
inline std::string value_to_string(const Rational& x) { return to_string(x); }

/// Coefficients in the field Q(p, q) itself.
struct SymbolicField {
  using value_type = Scalar;

  Scalar lift(const Scalar& x) const { return x; }
  Scalar monomial(const Monomial& m) const { return Scalar(m); }
  Scalar from_rational(const Rational& c) const { return Scalar(c); }
  std::string name() const { return "symbolic"; }
};

/**
 * @brief Coefficients in Q, obtained by the evaluation p -> p0, q -> q0.
 *
 * Construction rejects points with p0 q0 = 0 or p0^8 = +-q0^8, where r = +-s.
 */
class NumericField {
 public:
  using value_type = Rational;

  NumericField(const Rational& p0, const Rational& q0);

  Rational lift(const Scalar& x) const { return x.eval(p0_, q0_); }
  Rational monomial(const Monomial& m) const { return m.coeff * power(p_pos_, p_neg_, p0_, m.ep) * power(q_pos_, q_neg_, q0_, m.eq); }
  Rational from_rational(const Rational& c) const { return c; }
  std::string name() const { return "numeric(" + to_string(p0_) + "," + to_string(q0_) + ")"; }

  const Rational& p0() const { return p0_; }
  const Rational& q0() const { return q0_; }

  /// True when (p0, q0) satisfies the standing assumptions p0 q0 != 0 and r != +-s.
  static bool valid_point(const Rational& p0, const Rational& q0);

 private:
  Rational p0_, q0_;
  std::vector<Rational> p_pos_, p_neg_, q_pos_, q_neg_;

  static Rational power(const std::vector<Rational>& pos, const std::vector<Rational>& neg, const Rational& x, int e);
};

}  // namespace uqrs
