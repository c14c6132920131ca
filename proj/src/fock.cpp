#include "uqrs/fock.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace uqrs {

NumericField::NumericField(const Rational& p0, const Rational& q0) : p0_(p0), q0_(q0) {
  if (!valid_point(p0, q0)) throw std::invalid_argument("numeric point must satisfy p0 q0 != 0 and p0^8 != +-q0^8");
  constexpr int kTable = 256;
  p_pos_.reserve(kTable);
  q_pos_.reserve(kTable);
  p_neg_.reserve(kTable);
  q_neg_.reserve(kTable);
  Rational pi = 1 / p0, qi = 1 / q0;
  Rational a = 1, b = 1, c = 1, d = 1;
  for (int k = 0; k < kTable; ++k) {
    p_pos_.push_back(a);
    q_pos_.push_back(b);
    p_neg_.push_back(c);
    q_neg_.push_back(d);
    a *= p0;
    b *= q0;
    c *= pi;
    d *= qi;
  }
}

bool NumericField::valid_point(const Rational& p0, const Rational& q0) {
  if (sgn(p0) == 0 || sgn(q0) == 0) return false;
  const Rational r = rational_pow(p0, 8);
  const Rational s = rational_pow(q0, 8);
  return r != s && r != -s;
}

Rational NumericField::power(const std::vector<Rational>& pos, const std::vector<Rational>& neg, const Rational& x,
                             int e) {
  if (e >= 0 && static_cast<std::size_t>(e) < pos.size()) return pos[static_cast<std::size_t>(e)];
  if (e < 0 && static_cast<std::size_t>(-e) < neg.size()) return neg[static_cast<std::size_t>(-e)];
  return rational_pow(x, e);
}

std::size_t FockState::hash() const {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ULL; };
  for (Creator c : creators) mix(c);
  mix(0xabcdef);
  for (int x : point.lam) mix(static_cast<std::size_t>(x + 1024));
  mix(0x123457);
  for (int x : point.lam_tilde) mix(static_cast<std::size_t>(x + 1024));
  return h;
}

std::string FockState::to_string() const {
  std::ostringstream out;
  for (Creator c : creators)
    out << (creator_family(c) == Family::A ? "a" : "b") << creator_index(c) << "(-" << creator_depth(c) << ") ";
  out << "| lam=[";
  for (std::size_t k = 0; k < point.lam.size(); ++k) out << (k ? "," : "") << point.lam[k];
  out << "] lamTilde=[";
  for (std::size_t k = 0; k < point.lam_tilde.size(); ++k) out << (k ? "," : "") << point.lam_tilde[k];
  out << "]";
  return out.str();
}

FockState vacuum_state(int n) {
  FockState s;
  s.point.lam.assign(static_cast<std::size_t>(n), 0);
  s.point.lam_tilde.assign(static_cast<std::size_t>(n - 1), 0);
  return s;
}

Scalar heisenberg_constant(const RootData& roots, int i, int j, int m) {
  const Rational f = roots.form(i, j);
  static std::mutex lock;
  static std::map<std::pair<Rational, int>, Scalar> cache;
  const auto key = std::make_pair(f, m);
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const Rational half_m(m, 2);
  Scalar out(monomial_pow(rs_monomial(1, 1), half_m - Rational(m) * f / 2));
  out *= qnum(Rational(m) * f);
  out *= qnum(Rational(m));
  out = out / Scalar(Rational(m));
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(key, std::move(out)).first->second;
}

Scalar heisenberg_commutator(const RootData& roots, int i, int j, int l) {
  if (l == 0) throw std::invalid_argument("commutator of zero modes");
  if (l > 0) return heisenberg_constant(roots, i, j, l);
  return -heisenberg_constant(roots, j, i, -l);
}

Rational zero_mode(const RootData& roots, int i, Family family, const FockState& s) {
  if (family == Family::A) return roots.form_simple(i, s.point.lam);
  return roots.form_tilde_simple(i, s.point.lam_tilde);
}

int sign_op(const RootData& roots, int j, const FockState& s) {
  const Rational twice = 2 * roots.form_simple(j, s.point.lam);
  const long e = to_long(twice);
  return (e % 2 == 0) ? 1 : -1;
}

Rational weighted_degree(const RootData& roots, const FockState& s) {
  Rational out = 0;
  for (Creator c : s.creators) {
    const Rational w = creator_family(c) == Family::A ? roots.d(creator_index(c)) : Rational(1, 2);
    out += w * creator_depth(c);
  }
  return out;
}

long principal_degree(const FockState& s) {
  long out = 0;
  for (Creator c : s.creators) out += creator_depth(c);
  return out;
}

void insert_creator(std::vector<Creator>& creators, Creator c) {
  creators.insert(std::upper_bound(creators.begin(), creators.end(), c), c);
}

FockState shift_state(const RootData& roots, const FockState& s, const RootVector& alpha,
                      const TildeVector& alpha_tilde) {
  FockState t = s;
  for (std::size_t k = 0; k < t.point.lam.size(); ++k) t.point.lam[k] += alpha.at(k);
  for (std::size_t k = 0; k < t.point.lam_tilde.size(); ++k) t.point.lam_tilde[k] += alpha_tilde.at(k);
  if (!is_admissible(roots, t.point)) throw ArithmeticError("shift leaves the admissible lattice: " + t.to_string());
  return t;
}

}  // namespace uqrs
