#include "uqrs/rational.hpp"

#include <climits>

#include "uqrs/modular.hpp"

namespace uqrs {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  std::size_t slash = text.find('/');
  auto all_digits = [&](std::size_t b, std::size_t e) {
    if (b >= e) return false;
    for (std::size_t k = b; k < e; ++k)
      if (text[k] < '0' || text[k] > '9') return false;
    return true;
  };
  std::size_t num_end = slash == std::string::npos ? text.size() : slash;
  if (!all_digits(start, num_end)) throw std::invalid_argument("malformed rational literal: " + text);
  if (slash != std::string::npos && !all_digits(slash + 1, text.size()))
    throw std::invalid_argument("malformed rational literal: " + text);
  mpz_class num(text.substr(start, num_end - start));
  if (text[0] == '-') num = -num;
  mpz_class den = 1;
  if (slash != std::string::npos) den = mpz_class(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + text);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational rational_pow(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw ArithmeticError("zero raised to a negative power");
    return rational_pow(Rational(1) / x, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

long to_long(const Rational& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    throw ArithmeticError("rational is not a machine integer: " + x.get_str());
  return x.get_num().get_si();
}

std::uint64_t rational_mod(const Rational& x, std::uint64_t prime) {
  std::uint64_t num = mpz_fdiv_ui(x.get_num_mpz_t(), prime);
  if (x.get_den() == 1) return num;
  std::uint64_t den = mpz_fdiv_ui(x.get_den_mpz_t(), prime);
  if (den == 0) return prime;
  return modular::mul(num, modular::inverse(den, prime), prime);
}

namespace modular {

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul(result, base, m);
    base = mul(base, base, m);
    e >>= 1U;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0;
  __int128 new_t = 1;
  __int128 r = m;
  __int128 new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    const __int128 tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    const __int128 tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int twos = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++twos;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int k = 1; k < twos; ++k) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace modular
}  // namespace uqrs
