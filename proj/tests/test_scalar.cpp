#include <doctest.h>

#include <random>

#include "uqrs/cyclotomic.hpp"
#include "uqrs/polygcd.hpp"
#include "uqrs/scalar.hpp"

using namespace uqrs;

namespace {

Scalar r() { return Scalar::r(); }
Scalar s() { return Scalar::s(); }
Scalar one() { return Scalar(1L); }

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(-8, 8);
  std::uniform_int_distribution<int> terms(1, 3);
  auto poly = [&]() {
    LaurentPoly x;
    const int t = terms(rng);
    for (int k = 0; k < t; ++k) x += LaurentPoly::monomial(coeff(rng), expo(rng), expo(rng));
    return x;
  };
  LaurentPoly num = poly();
  LaurentPoly den = poly();
  while (den.is_zero()) den = poly();
  Scalar out = Scalar(num) / Scalar(den);
  if (rng() % 2 == 0) out = out * qnum(Rational(static_cast<long>(rng() % 4 + 1)));
  if (rng() % 3 == 0) out = out / qnum(Rational(static_cast<long>(rng() % 3 + 2)));
  return out;
}

}  // namespace

TEST_CASE("laurent division and gcd") {
  LaurentPoly p = LaurentPoly::monomial(1, 1, 0);
  LaurentPoly q = LaurentPoly::monomial(1, 0, 1);
  LaurentPoly a = (p - q) * (p + q) * (p * p + q);
  LaurentPoly b = (p + q) * (p * p + q) * (p - q * q);
  LaurentPoly g = poly_gcd(a, b);
  CHECK(g == (p + q) * (p * p + q));
  LaurentPoly quotient;
  CHECK(divide_exact(a, p - q, &quotient));
  CHECK(quotient == (p + q) * (p * p + q));
  CHECK_FALSE(divide_exact(a, p - q * q, &quotient));
}

TEST_CASE("cyclotomic forms multiply to binomials") {
  for (int L : {1, 2, 6, 8, 12, 24}) {
    LaurentPoly prod(Rational(1));
    for (int d : binomial_minus_factors(L)) prod *= cyclotomic_form(d).poly;
    CHECK(prod == LaurentPoly::monomial(1, L, 0) - LaurentPoly::monomial(1, 0, L));
    LaurentPoly plus(Rational(1));
    for (int d : binomial_plus_factors(L)) plus *= cyclotomic_form(d).poly;
    CHECK(plus == LaurentPoly::monomial(1, L, 0) + LaurentPoly::monomial(1, 0, L));
  }
}

TEST_CASE("field operation examples") {
  Scalar r8s8 = r() - s();
  CHECK((r8s8 / r8s8).is_one());
  CHECK((r() / s() * (s() / r())).is_one());
  CHECK((r() * r() - s() * s()) / (r() - s()) == r() + s());
  CHECK_THROWS_AS(one() / Scalar(), ArithmeticError);
}

TEST_CASE("monomial powers") {
  CHECK(monomial_pow(rs_monomial(1, 1), Rational(1, 8)) == (Monomial{1, 1, 1}));
  CHECK(monomial_pow(rs_monomial(1, 0), Rational(1, 2)) == (Monomial{1, 4, 0}));
  CHECK(monomial_pow(rs_monomial(-1, 1), Rational(1, 4)) == (Monomial{1, -2, 2}));
  CHECK(monomial_pow(Monomial{-1, 8, 0}, Rational(3)) == (Monomial{-1, 24, 0}));
  CHECK_THROWS_AS(monomial_pow(Monomial{1, 1, 0}, Rational(1, 2)), ArithmeticError);
  CHECK_THROWS_AS(monomial_pow(Monomial{-1, 8, 0}, Rational(1, 2)), ArithmeticError);
}

TEST_CASE("r,s-numbers") {
  CHECK(qnum(1).is_one());
  CHECK(qnum(2) == r() + s());
  CHECK(qnum(0).is_zero());
  for (long n = 1; n <= 4; ++n) {
    Scalar rs_n = (r() * s()).pow(-n);
    CHECK(qnum(-n) == -rs_n * qnum(n));
  }
  CHECK(qnum_rel(2, 1) == r() + s());
  CHECK(qnum_rel(2, Rational(1, 2)) == Scalar::monomial(1, 4, 0) + Scalar::monomial(1, 0, 4));
  CHECK(qnum_rel(1, Rational(1, 2)).is_one());
  CHECK(qnum_rel(1, 1).is_one());
  // Half-integer argument: [1/2] = (r^{1/2} - s^{1/2})/(r - s) = 1/(r^{1/2} + s^{1/2}).
  CHECK(qnum(Rational(1, 2)) == (Scalar::monomial(1, 4, 0) + Scalar::monomial(1, 0, 4)).inverse());
  for (long m = 1; m <= 4; ++m) {
    for (long n = 1; n <= 4; ++n) {
      CHECK(qnum(m + n) == r().pow(m) * qnum(n) + s().pow(n) * qnum(m));
    }
  }
}

TEST_CASE("evaluation") {
  CHECK((r() + s()).eval(1, 1) == 2);
  Rational expected = (rational_pow(2, 24) - 1) / (rational_pow(2, 8) - 1);
  CHECK(qnum(3).eval(2, 1) == expected);
  for (long p0 : {1L, 2L, 3L}) CHECK(qnum(2).eval(p0, p0) == 2 * rational_pow(p0, 8));
  CHECK_THROWS_AS(((r() - s()).inverse()).eval(2, 2), ArithmeticError);
  CHECK_THROWS_AS(r().eval(0, 1), ArithmeticError);
}

TEST_CASE("randomized field axioms, canonical form and evaluation homomorphism") {
  std::mt19937 rng(12345);
  const Rational p0(3, 2);
  const Rational q0(-2, 5);
  for (int trial = 0; trial < 40; ++trial) {
    Scalar x = random_scalar(rng);
    Scalar y = random_scalar(rng);
    Scalar z = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Scalar());
    if (!x.is_zero()) CHECK((x / x).is_one());
    CHECK(x.normalized() == x);
    CHECK(x.normalized().normalized() == x.normalized());
    CHECK(x.swapped().swapped() == x);
    CHECK((x * y).swapped() == x.swapped() * y.swapped());
    Rational ex = x.eval(p0, q0);
    Rational ey = y.eval(p0, q0);
    CHECK((x * y).eval(p0, q0) == ex * ey);
    CHECK((x + y).eval(p0, q0) == ex + ey);
  }
}
