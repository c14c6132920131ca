/**
 * @file rational.hpp
 * @brief Exact rational numbers (GMP) and small helpers shared by every layer.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uqrs {

/// Exact rational number backed by GMP.
using Rational = mpq_class;

/// Error raised for any arithmetic that has no exact answer (division by zero, poles, grid violations).
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * @brief Parse "a", "-a" or "a/b" into a canonical rational.
 * @throws std::invalid_argument on malformed input or zero denominator.
 */
Rational parse_rational(const std::string& text);

/// Canonical text form: "a" or "a/b".
std::string to_string(const Rational& x);

/// x^e for an integer e (negative exponents require x != 0).
Rational rational_pow(const Rational& x, long e);

/// True when the rational is an integer.
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Floor-free integer conversion; throws when x is not an integer or does not fit in long.
long to_long(const Rational& x);

/// Residue of x modulo a prime P, or P itself when the denominator vanishes mod P.
std::uint64_t rational_mod(const Rational& x, std::uint64_t prime);

}  // namespace uqrs
