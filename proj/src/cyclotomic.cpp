#include "uqrs/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "uqrs/modular.hpp"

namespace uqrs {

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct Root {
  std::uint64_t prime = 0;
  std::uint64_t zeta = 0;
};

Root build_root(int d) {
  Root root;
  const std::uint64_t base = std::uint64_t{1} << 40;
  std::uint64_t k = base / static_cast<std::uint64_t>(d) + 1;
  while (!modular::is_prime(k * static_cast<std::uint64_t>(d) + 1)) ++k;
  root.prime = k * static_cast<std::uint64_t>(d) + 1;
  const auto factors = prime_factors(d);
  for (std::uint64_t g = 2;; ++g) {
    std::uint64_t z = modular::pow(g, (root.prime - 1) / static_cast<std::uint64_t>(d), root.prime);
    bool primitive = true;
    for (int f : factors) {
      if (modular::pow(z, static_cast<std::uint64_t>(d / f), root.prime) == 1) {
        primitive = false;
        break;
      }
    }
    if (d == 1) primitive = (z == 1);
    if (primitive) {
      root.zeta = z;
      return root;
    }
  }
}

std::mutex& root_mutex() {
  static std::mutex m;
  return m;
}

Root root_of(int d) {
  static std::map<int, Root> roots;
  std::lock_guard<std::mutex> lock(root_mutex());
  auto it = roots.find(d);
  if (it != roots.end()) return it->second;
  Root root = build_root(d);
  roots.emplace(d, root);
  return root;
}

std::unique_ptr<CyclotomicForm> build_form(int d, const std::vector<const CyclotomicForm*>& lower) {
  auto form = std::make_unique<CyclotomicForm>();
  form->d = d;
  form->phi = euler_phi(d);
  // x^d - 1 divided by Phi_e(x) for the proper divisors e, all as polynomials in p with q^0.
  LaurentPoly x = LaurentPoly::monomial(1, d, 0) - LaurentPoly(Rational(1));
  for (const CyclotomicForm* e : lower) {
    std::vector<Term> dehom;
    for (const auto& t : e->poly.terms()) dehom.push_back(Term{t.ep, 0, t.c});
    LaurentPoly factor = LaurentPoly::from_terms(std::move(dehom));
    LaurentPoly quotient;
    if (!divide_exact(x, factor, &quotient)) throw ArithmeticError("cyclotomic construction failed");
    x = quotient;
  }
  std::vector<Term> hom;
  for (const auto& t : x.terms()) hom.push_back(Term{t.ep, form->phi - t.ep, t.c});
  form->poly = LaurentPoly::from_terms(std::move(hom));

  Root root = root_of(d);
  form->prime = root.prime;
  form->zeta = root.zeta;
  return form;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::unique_ptr<CyclotomicForm>>& cache() {
  static std::map<int, std::unique_ptr<CyclotomicForm>> c;
  return c;
}

const CyclotomicForm& form_locked(int d) {
  auto& c = cache();
  auto it = c.find(d);
  if (it != c.end()) return *it->second;
  std::vector<const CyclotomicForm*> lower;
  for (int e : divisors(d)) {
    if (e != d) lower.push_back(&form_locked(e));
  }
  auto form = build_form(d, lower);
  const CyclotomicForm& ref = *form;
  c.emplace(d, std::move(form));
  return ref;
}

}  // namespace

int euler_phi(int d) {
  int result = d;
  for (int f : prime_factors(d)) result = result / f * (f - 1);
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> small;
  std::vector<int> large;
  for (int f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      small.push_back(f);
      if (f != n / f) large.push_back(n / f);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<int> binomial_minus_factors(int L) { return divisors(L); }

std::vector<int> binomial_plus_factors(int L) {
  std::vector<int> out;
  for (int d : divisors(2 * L))
    if (L % d != 0) out.push_back(d);
  return out;
}

const CyclotomicForm& cyclotomic_form(int d) {
  if (d < 1) throw ArithmeticError("cyclotomic index must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex());
  return form_locked(d);
}

bool may_divide_by_cyclotomic(const LaurentPoly& poly, int d) {
  if (poly.is_zero()) return true;
  // Phi_d(p, q) | N exactly when N(zeta t, t) vanishes identically in t.
  const Root root = root_of(d);
  const std::uint64_t t0 = 982451653ULL % root.prime;
  const std::uint64_t pval = modular::mul(root.zeta, t0, root.prime);
  const std::uint64_t value = poly.eval_mod(pval, t0, root.prime);
  return value == 0 || value == root.prime;
}

bool divide_by_cyclotomic(const LaurentPoly& poly, int d, LaurentPoly* quotient) {
  if (poly.is_zero()) {
    *quotient = LaurentPoly();
    return true;
  }
  if (!may_divide_by_cyclotomic(poly, d)) return false;
  return divide_exact(poly, cyclotomic_form(d).poly, quotient);
}

}  // namespace uqrs
