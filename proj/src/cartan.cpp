#include "uqrs/cartan.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace uqrs {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::string vec_to_string(const std::vector<int>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
  out << "]";
  return out.str();
}

RootVector add(const RootVector& a, const RootVector& b) {
  RootVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

/// (-1)^e as a monomial.
Monomial sign_monomial(long e) { return Monomial{(e % 2 == 0) ? Rational(1) : Rational(-1), 0, 0}; }

}  // namespace

RootData::RootData(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  d_.assign(idx(n + 1), Rational(1, 2));
  d_[0] = 1;
  d_[idx(n)] = 1;
  form_.assign(idx(n + 1), std::vector<Rational>(idx(n + 1), Rational(0)));
  for (int i = 1; i <= n; ++i) {
    form_[idx(i)][idx(i)] = (i < n) ? Rational(1) : Rational(2);
    if (i + 1 < n) {
      form_[idx(i)][idx(i + 1)] = Rational(-1, 2);
      form_[idx(i + 1)][idx(i)] = Rational(-1, 2);
    }
  }
  form_[idx(n - 1)][idx(n)] = -1;
  form_[idx(n)][idx(n - 1)] = -1;
  theta_.assign(idx(n), 2);
  theta_[idx(n - 1)] = 1;
  for (int j = 1; j <= n; ++j) {
    Rational v = -form_simple(j, theta_);
    form_[0][idx(j)] = v;
    form_[idx(j)][0] = v;
  }
  form_[0][0] = form(theta_, theta_);
}

int RootData::cartan(int i, int j) const {
  Rational a = form(i, j) / d(i);
  return static_cast<int>(to_long(a));
}

Rational RootData::form_simple(int i, const RootVector& x) const {
  Rational out = 0;
  for (int j = 1; j <= n_; ++j) {
    const int c = x.at(idx(j - 1));
    if (c != 0) out += c * form_[idx(i)][idx(j)];
  }
  return out;
}

Rational RootData::form(const RootVector& x, const RootVector& y) const {
  Rational out = 0;
  for (int i = 1; i <= n_; ++i) {
    const int c = x.at(idx(i - 1));
    if (c != 0) out += c * form_simple(i, y);
  }
  return out;
}

Rational RootData::form_tilde_simple(int i, const TildeVector& y) const {
  if (i >= n_) return 0;
  Rational out = y.at(idx(i - 1));
  if (i > 1) out -= Rational(y[idx(i - 2)]) / 2;
  if (i < n_ - 1) out -= Rational(y[idx(i)]) / 2;
  return out;
}

Rational RootData::form_tilde(const TildeVector& x, const TildeVector& y) const {
  Rational out = 0;
  for (int i = 1; i < n_; ++i) {
    const int c = x.at(idx(i - 1));
    if (c != 0) out += c * form_tilde_simple(i, y);
  }
  return out;
}

bool RootData::sum_is_root(int i, int j) const { return i != j && (i - j == 1 || j - i == 1); }

RootVector RootData::simple(int i) const {
  RootVector v(idx(n_), 0);
  v.at(idx(i - 1)) = 1;
  return v;
}

TildeVector RootData::simple_tilde(int i) const {
  TildeVector v(idx(n_ - 1), 0);
  if (i < n_) v.at(idx(i - 1)) = 1;
  return v;
}

Monomial monomial_ipow(const Monomial& m, long e) {
  Monomial base = e < 0 ? m.inverse() : m;
  const long k = e < 0 ? -e : e;
  return Monomial{rational_pow(base.coeff, k), static_cast<int>(base.ep * k), static_cast<int>(base.eq * k)};
}

StructConsts::StructConsts(const RootData& roots) : roots_(roots) {
  const int n = roots.rank();
  table_.assign(idx(n + 1), std::vector<Monomial>(idx(n + 1)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Rational& f = roots.form(i, j);
      if (i < j) table_[idx(i)][idx(j)] = rs_monomial(f, 0);
      else if (i > j) table_[idx(i)][idx(j)] = rs_monomial(0, -f);
      else table_[idx(i)][idx(j)] = rs_monomial(f / 2, -f / 2);
    }
  }
  for (int j = 0; j <= n; ++j) table_[0][idx(j)] = rs_monomial(0, 0);
  table_[0][0] = rs_monomial(1, -1);
  table_[0][1] = rs_monomial(-1, 0);
  table_[0][idx(n)] = rs_monomial(1, 1);
  for (int i = 1; i <= n; ++i) table_[idx(i)][0] = rs_monomial(0, 0);
  table_[1][0] = rs_monomial(0, 1);
  table_[idx(n)][0] = rs_monomial(-1, -1);
}

Monomial StructConsts::pairing(const RootVector& beta, int i) const {
  Monomial out;
  for (int j = 1; j <= roots_.rank(); ++j) {
    const int c = beta.at(idx(j - 1));
    if (c != 0) out = out * monomial_ipow(at(j, i), c);
  }
  return out;
}

Monomial StructConsts::pairing_rev(int i, const RootVector& beta) const {
  Monomial out;
  for (int j = 1; j <= roots_.rank(); ++j) {
    const int c = beta.at(idx(j - 1));
    if (c != 0) out = out * monomial_ipow(at(i, j), c);
  }
  return out;
}

bool is_admissible(const RootData& roots, const LatticePoint& point) {
  for (int i = 1; i <= roots.rank(); ++i) {
    const Rational a = roots.form_simple(i, point.lam);
    const Rational b = roots.form_tilde_simple(i, point.lam_tilde);
    if (!is_integer(Rational(a + b)) || !is_integer(Rational(a - b))) return false;
  }
  return true;
}

TildeVector bar_project(const RootVector& lam) {
  TildeVector out;
  if (lam.empty()) return out;
  out.reserve(lam.size() - 1);
  for (std::size_t k = 0; k + 1 < lam.size(); ++k) out.push_back(((lam[k] % 2) + 2) % 2);
  return out;
}

Cocycle::Cocycle(const RootData& roots) : roots_(roots) {
  const int n = roots.rank();
  base_.assign(idx(n), std::vector<Monomial>(idx(n)));
  for (int i = 1; i <= n; ++i) {
    const Rational di = roots.d(i);
    for (int j = 1; j <= n; ++j) {
      Monomial m;
      if (i == j) {
        m = rs_monomial(di / 2, di / 2);
        m.coeff = -1;
      } else if (i > j && roots.sum_is_root(i, j)) {
        const int a = roots.cartan(i, j);
        m = rs_monomial(di * a / 2, di * a / 2);
        m.coeff = (a % 2 == 0) ? 1 : -1;
      }
      base_[idx(i - 1)][idx(j - 1)] = m;
    }
  }
}

Monomial Cocycle::simple(int i, const RootVector& beta) const {
  Monomial out;
  for (int j = 1; j <= roots_.rank(); ++j) {
    const int c = beta.at(idx(j - 1));
    if (c != 0) out = out * monomial_ipow(base(i, j), c);
  }
  return out;
}

long Cocycle::correction_exponent(const RootVector& a, const RootVector& b, const RootVector& c) const {
  const TildeVector ba = bar_project(a);
  const TildeVector bb = bar_project(b);
  const TildeVector bab = bar_project(add(a, b));
  TildeVector diff(ba.size());
  for (std::size_t k = 0; k < ba.size(); ++k) diff[k] = bab[k] - ba[k] - bb[k];
  return to_long(roots_.form_tilde(diff, bar_project(c)));
}

Monomial Cocycle::eval(const RootVector& alpha, const RootVector& beta) const {
  const int n = roots_.rank();
  Monomial out;
  RootVector current(idx(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int m = alpha.at(idx(i - 1));
    const int step_sign = m < 0 ? -1 : 1;
    RootVector step(idx(n), 0);
    step[idx(i - 1)] = step_sign;
    for (int t = 0; t < (m < 0 ? -m : m); ++t) {
      Monomial e_step = simple(i, beta);
      if (step_sign < 0) {
        // epsilon(-alpha_i, beta) from epsilon(0, beta) = 1 and the sign-corrected rule.
        const long corr = correction_exponent(step, roots_.simple(i), beta);
        e_step = e_step.inverse() * sign_monomial(corr);
      }
      out = out * e_step * sign_monomial(correction_exponent(current, step, beta));
      current[idx(i - 1)] += step_sign;
    }
  }
  return out;
}

Monomial Cocycle::eval_closed(const RootVector& alpha, const RootVector& beta) const {
  const int n = roots_.rank();
  Monomial out;
  long sign_exp = 0;
  const TildeVector bar_beta = bar_project(beta);
  for (int i = 1; i <= n; ++i) {
    const int m = alpha.at(idx(i - 1));
    if (m == 0) continue;
    out = out * monomial_ipow(simple(i, beta), m);
    if (i < n) {
      const long binom = static_cast<long>(m) * (m - 1) / 2;
      sign_exp += binom * to_long(2 * roots_.form_tilde_simple(i, bar_beta));
    }
  }
  return out * sign_monomial(sign_exp < 0 ? -sign_exp : sign_exp);
}

RelationReport check_structure_constants(int n) {
  RootData roots(n);
  StructConsts sc(roots);
  RelationReport rep;
  rep.suite = "structure_constants";
  rep.window = "rank=" + std::to_string(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Monomial lhs = sc.at(i, j) * sc.at(j, i);
      const Monomial rhs = monomial_pow(rs_monomial(1, -1), roots.form(i, j));
      rep.add("pair(" + std::to_string(i) + "," + std::to_string(j) + ")", lhs == rhs,
              lhs == rhs ? std::string() : "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
    }
  }
  rep.add("omega'_1 on omega_0 is s", sc.at(1, 0) == rs_monomial(0, 1));
  bool middle = true;
  for (int i = 2; i < n; ++i) middle = middle && sc.at(i, 0) == rs_monomial(0, 0);
  rep.add("omega'_i on omega_0 is 1 for middle i", middle);
  rep.add("omega'_n on omega_0 is (rs)^-1", sc.at(n, 0) == rs_monomial(-1, -1));
  return rep;
}

RelationReport check_cocycle(int n, int samples, std::uint64_t seed) {
  RootData roots(n);
  Cocycle eps(roots);
  RelationReport rep;
  rep.suite = "cocycle";
  rep.window = "rank=" + std::to_string(n) + " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_root = [&]() {
    RootVector v(idx(n));
    for (auto& c : v) c = coeff(rng);
    return v;
  };
  std::size_t bad_add = 0, bad_mult = 0, bad_closed = 0;
  std::string witness;
  for (int t = 0; t < samples; ++t) {
    const RootVector a = random_root();
    const RootVector b = random_root();
    const RootVector c = random_root();
    const std::string label = "(" + vec_to_string(a) + "," + vec_to_string(b) + "," + vec_to_string(c) + ")";
    if (eps.eval(a, add(b, c)) != eps.eval(a, b) * eps.eval(a, c)) {
      ++bad_mult;
      if (witness.empty()) witness = "multiplicativity " + label;
    }
    const Monomial lhs = eps.eval(add(a, b), c);
    const Monomial rhs = eps.eval(a, c) * eps.eval(b, c) * sign_monomial(eps.correction_exponent(a, b, c));
    if (lhs != rhs) {
      ++bad_add;
      if (witness.empty()) witness = "additivity " + label;
    }
    if (eps.eval(a, b) != eps.eval_closed(a, b)) {
      ++bad_closed;
      if (witness.empty()) witness = "closed form " + label;
    }
  }
  rep.add("second argument multiplicative", bad_mult == 0, bad_mult ? witness : std::string());
  rep.add("first argument sign-corrected additive", bad_add == 0, bad_add ? witness : std::string());
  rep.add("closed form agrees with recursive evaluation", bad_closed == 0, bad_closed ? witness : std::string());
  const RootVector zero(idx(n), 0);
  bool zero_ok = true;
  for (int t = 0; t < 10; ++t) {
    const RootVector a = random_root();
    zero_ok = zero_ok && eps.eval(a, zero) == Monomial{};
  }
  rep.add("epsilon(alpha, 0) = 1", zero_ok);

  bool literal_otherwise = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Monomial prod = eps.base(i, j) * eps.base(j, i);
      const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i < n && j < n) {
        const int a = roots.cartan(i, j);
        const Rational di = roots.d(i);
        Monomial expect = rs_monomial(di * a / 2, di * a / 2) * sign_monomial(to_long(2 * roots.form(i, j)) & 1);
        rep.add("symmetric product on A-block " + pair, prod == expect,
                "product=" + prod.to_string() + " expected=" + expect.to_string());
      } else {
        // Consistent value on every pair: (-1)^{delta_{|i-j|,1}} (rs)^{(alpha_i|alpha_j)/2}.
        const Monomial expect =
            rs_monomial(roots.form(i, j) / 2, roots.form(i, j) / 2) * sign_monomial(roots.sum_is_root(i, j) ? 1 : 0);
        rep.add("symmetric product with the long root " + pair, prod == expect,
                "product=" + prod.to_string() + " expected=" + expect.to_string());
        Monomial literal = rs_monomial(Rational(1, 2), Rational(1, 2));
        literal.coeff = -1;
        literal_otherwise = literal_otherwise && prod == literal;
      }
    }
  }
  rep.add("literal -(rs)^{1/2} for every pair involving alpha_n", literal_otherwise,
          "the table gives (rs) on (n,n), -(rs)^{-1/2} on the adjacent pair and 1 elsewhere", true);
  return rep;
}

}  // namespace uqrs
