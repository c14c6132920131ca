/**
 * @file cyclotomic.hpp
 * @brief Homogenized cyclotomic forms Phi_d(p, q), the irreducible factors of p^L - q^L.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "uqrs/laurent.hpp"

namespace uqrs {

/// Phi_d(p, q) = q^{phi(d)} Phi_d(p/q) together with a modular root used as a divisibility filter.
struct CyclotomicForm {
  int d = 0;
  int phi = 0;
  LaurentPoly poly;
  std::uint64_t prime = 0;  ///< prime with prime = 1 mod d
  std::uint64_t zeta = 0;   ///< primitive d-th root of unity modulo prime
};

/// Cached form for d >= 1; safe to call concurrently.
const CyclotomicForm& cyclotomic_form(int d);

/// Euler's totient.
int euler_phi(int d);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

/// Indices d with p^L - q^L = prod Phi_d (L >= 1).
std::vector<int> binomial_minus_factors(int L);

/// Indices d with p^L + q^L = prod Phi_d (L >= 1).
std::vector<int> binomial_plus_factors(int L);

/// Cheap necessary condition for Phi_d(p, q) | poly (false means certainly not divisible).
bool may_divide_by_cyclotomic(const LaurentPoly& poly, int d);

/**
 * @brief True when Phi_d(p, q) divides the Laurent polynomial; on success the quotient is stored.
 *
 * A modular evaluation at a primitive root rules out most non-divisible inputs
 * before the exact division is attempted.
 */
bool divide_by_cyclotomic(const LaurentPoly& poly, int d, LaurentPoly* quotient);

}  // namespace uqrs
