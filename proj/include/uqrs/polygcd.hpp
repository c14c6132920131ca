/**
 * @file polygcd.hpp
 * @brief Greatest common divisors of bivariate polynomials over Q (primitive remainder sequences).
 */
#pragma once

#include "uqrs/laurent.hpp"

namespace uqrs {

/**
 * @brief Splits a nonzero Laurent polynomial as unit * normalized.
 *
 * The normalized part has no monomial factor (minimal exponents are zero),
 * coprime integer coefficients and a positive leading coefficient. The unit is
 * a rational multiple of a monomial.
 */
LaurentPoly normalize_associate(const LaurentPoly& x, LaurentPoly* unit);

/// Normalized gcd in the Laurent ring Q[p^{+-1}, q^{+-1}]; gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace uqrs
