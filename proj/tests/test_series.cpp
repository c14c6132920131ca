#include <doctest.h>

#include <random>

#include "uqrs/series.hpp"

using namespace uqrs;

namespace {

Scalar rs(const Rational& a, const Rational& b) { return Scalar(rs_monomial(a, b)); }

}  // namespace

TEST_CASE("series arithmetic") {
  const int N = 8;
  TruncatedSeries one_minus_z = TruncatedSeries::polynomial({{0, Scalar(1L)}, {1, Scalar(-1L)}}, N);
  CHECK((one_minus_z * geometric(Scalar(1L), N)).agrees_with(TruncatedSeries::constant(Scalar(1L), N)));
  CHECK((one_minus_z * TruncatedSeries::constant(Scalar(1L), N)).agrees_with(one_minus_z));
  Scalar a = Scalar::r();
  Scalar b = Scalar::s();
  TruncatedSeries prod = TruncatedSeries::polynomial({{0, Scalar(1L)}, {1, -a}}, N) *
                         TruncatedSeries::polynomial({{0, Scalar(1L)}, {1, -b}}, N);
  CHECK(prod.agrees_with(TruncatedSeries::polynomial({{0, Scalar(1L)}, {1, -(a + b)}, {2, a * b}}, N)));
  CHECK(geometric(a, N).inverse().agrees_with(TruncatedSeries::polynomial({{0, Scalar(1L)}, {1, -a}}, N)));
}

TEST_CASE("truncation order of products accounts for valuations") {
  TruncatedSeries x(5);
  x.set(2, Scalar(1L));
  TruncatedSeries y(4);
  y.set(0, Scalar(1L));
  CHECK((x * y).order() == 5);
}

TEST_CASE("exponential series") {
  const int N = 10;
  CHECK(exp_series(TruncatedSeries(N), N).agrees_with(TruncatedSeries::constant(Scalar(1L), N)));
  TruncatedSeries z(3);
  z.set(1, Scalar(1L));
  TruncatedSeries e = exp_series(z, 3);
  CHECK(e.coeff(0) == Scalar(1L));
  CHECK(e.coeff(1) == Scalar(1L));
  CHECK(e.coeff(2) == Scalar(Rational(1, 2)));
  CHECK(e.coeff(3) == Scalar(Rational(1, 6)));
  TruncatedSeries A(N);
  A.set(1, Scalar::r());
  A.set(3, Scalar::s() - Scalar(2L));
  A.set(4, qnum(3));
  CHECK((exp_series(A, N) * exp_series(-A, N)).agrees_with(TruncatedSeries::constant(Scalar(1L), N)));
  TruncatedSeries B(N);
  B.set(2, Scalar::r() * Scalar::s());
  CHECK(exp_series(A + B, N).agrees_with(exp_series(A, N) * exp_series(B, N)));
  TruncatedSeries bad(N);
  bad.set(0, Scalar(1L));
  CHECK_THROWS_AS(exp_series(bad, N), ArithmeticError);
}

TEST_CASE("deformed binomial") {
  const int N = 10;
  TruncatedSeries b1 = deformed_binomial(Scalar(1L), 1, N);
  CHECK(b1.coefficients().size() == 2);
  CHECK(b1.coeff(1) == Scalar(-1L));
  for (int n = 0; n <= N; ++n) CHECK(deformed_binomial(Scalar(1L), -1, N).coeff(n) == rs(-n, -n));
  CHECK(deformed_binomial(Scalar::r(), 0, N).agrees_with(TruncatedSeries::constant(Scalar(1L), N)));
  for (const Rational& a : {Rational(1, 2), Rational(-1, 2), Rational(1), Rational(3, 2)}) {
    for (const Scalar& c : {Scalar(1L), rs(Rational(1, 4), Rational(3, 4)), Scalar(Rational(2, 3))}) {
      // [-x] = -(rs)^{-x}[x], so the inverse of the a-th power carries the rescaled argument (rs)^a c.
      Scalar shifted = c * Scalar(monomial_pow(rs_monomial(1, 1), a));
      CHECK((deformed_binomial(c, a, N) * deformed_binomial(shifted, -a, N)).agrees_with(TruncatedSeries::constant(Scalar(1L), N)));
      if (a != 0) CHECK_FALSE((deformed_binomial(c, a, N) * deformed_binomial(c, -a, N)).agrees_with(TruncatedSeries::constant(Scalar(1L), N)));
    }
  }
  Scalar c = rs(Rational(1, 2), Rational(-1, 4));
  TruncatedSeries bc = deformed_binomial(c, 1, N);
  CHECK(bc.coefficients().size() == 2);
  CHECK(bc.coeff(1) == -c);
}

TEST_CASE("binomial product identities at order 16") {
  RelationReport report = check_binomial_identities(16);
  for (const auto& inst : report.instances) {
    INFO(inst.name << " " << inst.detail);
    CHECK(inst.passed);
  }
  CHECK(report.passed());
}

TEST_CASE("quadratic identity") {
  CHECK(check_quadratic_identity(Scalar(1L)));
  CHECK(check_quadratic_identity(rs(Rational(-1, 2), Rational(1, 2))));
  CHECK(check_quadratic_identity(rs(Rational(1, 4), Rational(1, 4))));
  CHECK(check_quadratic_identity(rs(Rational(1, 2), 0)));
  CHECK(check_quadratic_identity(Scalar(Rational(-7, 3))));
  CHECK_THROWS_AS(check_quadratic_identity(Scalar()), ArithmeticError);
}
