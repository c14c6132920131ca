/**
 * @file vertex.hpp
 * @brief Vertex operators Y_i^+-, U_j^+-, Z_j^+-, X_i^+- on the Fock space, exact
 * Fourier-mode extraction, and the modes of the psi / phi fields.
 *
 * Every operator is a product of a creation exponential, an annihilation
 * exponential, a lattice shift, a zero-mode power of z and a scalar. Applied to
 * a basis state the annihilation exponential terminates, and for a fixed power
 * of z only finitely many creation terms contribute, so each coefficient is
 * computed exactly by enumerating removed and created boson multisets.
 */
#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "uqrs/cartan.hpp"
#include "uqrs/fock.hpp"

namespace uqrs {

/// Coefficients of a range of powers of z, each a Fock vector.
template <class V>
using ExponentSlice = std::map<Rational, FockVector<V>>;

/// Convention switches of the vertex realization.
struct VertexConventions {
  /// Mode x(k) is the coefficient of z^{-k-1+mode_shift}.
  int mode_shift = 0;
  /// Evaluate the sign (-1)^{2 a_j(0)} of Z_j on the label after the Y shift (else before).
  bool sign_after_shift = true;
  /// Attach the sign of Z_j^- to its U_j^+ branch instead of its U_j^- branch.
  bool mirror_lowering_sign = true;
  /**
   * Scale x_i^-(z) by c_i = eps(alpha_i, alpha_i)^{-1} (rs)^{1/4} for i < n and
   * c_n = eps(alpha_n, alpha_n)^{-1}; with false, x_i^-(z) = Y_i^-(z) Z_i^-(z) literally.
   */
  bool normalize_lowering = true;
};

/// The scale c_i applied to x_i^-(z) under the normalized lowering convention.
Monomial lowering_scale(const RootData& roots, const Cocycle& eps, int i);

/// One partition of N with its multiplicity data.
struct PartitionTerm {
  std::vector<int> parts;  ///< ascending
  int length = 0;
  Rational inv_mult_factorial;  ///< 1 / prod m_k!
};

/// All partitions of N, ascending parts, deterministic order.
std::vector<PartitionTerm> partitions_of(int n);

template <class Field>
class VertexEngine {
 public:
  using V = typename Field::value_type;
  using Vec = FockVector<V>;

  VertexEngine(int n, const Field& field, VertexConventions conv = {})
      : roots_(n), consts_(roots_), eps_(roots_), field_(field), conv_(conv), heis_(roots_, field) {
    inv_qnum_.resize(kTableDepth + 1);
    for (int k = 1; k <= kTableDepth; ++k) inv_qnum_[static_cast<std::size_t>(k)] = invert_value(field.lift(qnum(Rational(k))));
    r_minus_s_ = field.lift(Scalar::r() - Scalar::s());
    rs_eighth_inv_ = field.monomial(monomial_pow(rs_monomial(1, 1), Rational(-1, 8)));
    zero_ = field.from_rational(Rational(0));
    one_ = field.from_rational(Rational(1));
    minus_one_ = field.from_rational(Rational(-1));
    lowering_.assign(static_cast<std::size_t>(n + 1), one_);
    if (conv_.normalize_lowering)
      for (int i = 1; i <= n; ++i) lowering_[static_cast<std::size_t>(i)] = field.monomial(lowering_scale(roots_, eps_, i));
  }

  int rank() const { return roots_.rank(); }
  const RootData& roots() const { return roots_; }
  const StructConsts& consts() const { return consts_; }
  const Cocycle& cocycle() const { return eps_; }
  const Field& field() const { return field_; }
  const HeisenbergTable<Field>& heisenberg() const { return heis_; }
  const VertexConventions& conventions() const { return conv_; }

  /// The argument rescaling c of U^eta inside Z^sign: sign=+ gives (s^{1/2}, r^{1/2}), sign=- gives (r^{-1/2}, s^{-1/2}).
  static Monomial z_scale(int sign, int eta) {
    if (sign > 0) return eta > 0 ? rs_monomial(0, Rational(1, 2)) : rs_monomial(Rational(1, 2), 0);
    return eta > 0 ? rs_monomial(Rational(-1, 2), 0) : rs_monomial(0, Rational(-1, 2));
  }

  /// Coefficients of z^e, lo <= e <= hi, of Y_i^sign(z) applied to s.
  ExponentSlice<V> apply_Y(int i, int sign, const FockState& s, const Rational& lo, const Rational& hi) const {
    ExponentSlice<V> out;
    const YData y = prepare_Y(i, sign, s);
    for (Rational e = first_on_grid(y.e0, lo); e <= hi; e += 1) {
      const int t = static_cast<int>(to_long(Rational(e - y.e0)));
      Vec v;
      for (const auto& term : y_terms(y, i, sign, t)) {
        FockState st;
        st.creators = term.creators;
        st.creators.insert(st.creators.end(), y.other.begin(), y.other.end());
        st.point = y.point;
        v.add(st, term.coeff * y.scalar);
      }
      if (!v.is_zero()) out.emplace(e, std::move(v));
    }
    return out;
  }

  /// Coefficients of z^e of U_j^eta(c z) applied to s.
  ExponentSlice<V> apply_U(int j, int eta, const Monomial& c, const FockState& s, const Rational& lo,
                           const Rational& hi) const {
    if (j >= rank()) throw std::invalid_argument("U_j requires j < n");
    ExponentSlice<V> out;
    const UData u = prepare_U(j, eta, c, s);
    for (Rational e = first_on_grid(u.e0, lo); e <= hi; e += 1) {
      const int t = static_cast<int>(to_long(Rational(e - u.e0)));
      Vec v;
      for (const auto& term : u_terms(u, j, eta, t)) {
        FockState st;
        st.creators = u.other;
        st.creators.insert(st.creators.end(), term.creators.begin(), term.creators.end());
        st.point = s.point;
        st.point.lam_tilde = u.lam_tilde;
        v.add(st, term.coeff * u.scalar);
      }
      if (!v.is_zero()) out.emplace(e, std::move(v));
    }
    return out;
  }

  /// Coefficients of z^e of X_i^sign(z) = Y_i^sign(z) Z_i^sign(z) applied to s (integer exponents only).
  ExponentSlice<V> apply_X(int i, int sign, const FockState& s, const Rational& lo, const Rational& hi) const {
    ExponentSlice<V> out;
    for (Rational e = first_on_grid(Rational(0), lo); e <= hi; e += 1) {
      Vec v = x_coefficient(i, sign, static_cast<int>(to_long(e)), s);
      if (!v.is_zero()) out.emplace(e, std::move(v));
    }
    return out;
  }

  /// The mode x_i^sign(k) on a basis state.
  Vec mode(int i, int sign, int k, const FockState& s) const {
    return x_coefficient(i, sign, -k - 1 + conv_.mode_shift, s);
  }

  /// psi_i(m), m >= 0: omega_i times the z^{-m} coefficient of exp((r - s) sum a_i(l) z^{-l}).
  Vec psi(int i, int m, const FockState& s) const {
    if (m < 0) throw std::invalid_argument("psi_i(m) requires m >= 0");
    Vec out;
    const V eig = field_.monomial(consts_.pairing(s.point.lam, i));
    const auto [a_part, b_part] = split(s.creators);
    auto coef = [&](int j, int k) { return r_minus_s_ * heis_.at(i, j, k); };
    for (const auto& rem : removals(a_part, coef)) {
      if (rem.degree != m) continue;
      FockState st;
      st.creators = rem.rest;
      st.creators.insert(st.creators.end(), b_part.begin(), b_part.end());
      st.point = s.point;
      out.add(st, rem.coeff * eig);
    }
    return out;
  }

  /// phi_i(m), m <= 0: omega'_i times the z^{-m} coefficient of exp(-(r - s) sum a_i(-l) z^l).
  Vec phi(int i, int m, const FockState& s) const {
    if (m > 0) throw std::invalid_argument("phi_i(m) requires m <= 0");
    Vec out;
    const V eig = field_.monomial(consts_.pairing_rev(i, s.point.lam).inverse());
    const auto [a_part, b_part] = split(s.creators);
    const V unit = -r_minus_s_;
    for (const auto& pt : partitions(-m)) {
      std::vector<Creator> created;
      for (int k : pt.parts) created.push_back(encode_creator(Family::A, i, k));
      FockState st;
      st.creators = merge_sorted(a_part, created);
      st.creators.insert(st.creators.end(), b_part.begin(), b_part.end());
      st.point = s.point;
      out.add(st, eig * power(unit, pt.length) * field_.from_rational(pt.inv_mult_factorial));
    }
    return out;
  }

  /// The torus element prod omega_i^{e_i} omega'_i^{f_i} (i = 1..n) on a basis state.
  V torus_eigenvalue(const std::vector<int>& e, const std::vector<int>& f, const FockState& s) const {
    Monomial m;
    for (int i = 1; i <= rank(); ++i) {
      const int ei = e.at(static_cast<std::size_t>(i - 1));
      const int fi = f.at(static_cast<std::size_t>(i - 1));
      if (ei != 0) m = m * monomial_ipow(consts_.pairing(s.point.lam, i), ei);
      if (fi != 0) m = m * monomial_ipow(consts_.pairing_rev(i, s.point.lam), -fi);
    }
    return field_.monomial(m);
  }

  /// Partitions of N (cached, thread-safe).
  const std::vector<PartitionTerm>& partitions(int N) const {
    if (N < 0 || N > kTableDepth) throw std::out_of_range("creation degree outside the tabulated range");
    std::call_once(partition_once_[static_cast<std::size_t>(N)],
                   [&] { partition_table_[static_cast<std::size_t>(N)] = partitions_of(N); });
    return partition_table_[static_cast<std::size_t>(N)];
  }

 private:
  struct Removal {
    int degree = 0;
    std::vector<Creator> rest;
    V coeff;
  };
  struct Term {
    std::vector<Creator> creators;
    V coeff;
  };
  struct YData {
    Rational e0;
    V scalar;
    std::vector<Removal> removals;
    int max_removed = 0;
    std::vector<Creator> other;
    LatticePoint point;
  };
  struct UData {
    Rational e0;
    V scalar;
    Monomial c;
    std::vector<Removal> removals;
    int max_removed = 0;
    std::vector<Creator> other;
    TildeVector lam_tilde;
  };

  RootData roots_;
  StructConsts consts_;
  Cocycle eps_;
  Field field_;
  VertexConventions conv_;
  HeisenbergTable<Field> heis_;
  std::vector<V> inv_qnum_;
  V r_minus_s_, rs_eighth_inv_, zero_, one_, minus_one_;
  std::vector<V> lowering_;
  mutable std::array<std::once_flag, kTableDepth + 1> partition_once_;
  mutable std::array<std::vector<PartitionTerm>, kTableDepth + 1> partition_table_;
  mutable std::array<std::once_flag, kTableDepth + 1> factor_once_;
  mutable std::array<std::vector<V>, kTableDepth + 1> factor_table_;

  static Rational first_on_grid(const Rational& base, const Rational& lo) {
    // smallest base + t (t integer) that is >= lo
    Rational diff = lo - base;
    mpz_class t;
    mpz_cdiv_q(t.get_mpz_t(), diff.get_num_mpz_t(), diff.get_den_mpz_t());
    return base + Rational(t);
  }

  V power(const V& x, int e) const {
    V out = one_;
    for (int k = 0; k < e; ++k) out *= x;
    return out;
  }

  static std::pair<std::vector<Creator>, std::vector<Creator>> split(const std::vector<Creator>& cr) {
    auto mid = std::find_if(cr.begin(), cr.end(), [](Creator c) { return creator_family(c) == Family::B; });
    return {std::vector<Creator>(cr.begin(), mid), std::vector<Creator>(mid, cr.end())};
  }

  static std::vector<Creator> merge_sorted(const std::vector<Creator>& a, const std::vector<Creator>& b) {
    std::vector<Creator> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  /// All ways the annihilation exponential acts on a sorted single-family creator list.
  template <class Coef>
  std::vector<Removal> removals(const std::vector<Creator>& part, Coef coef) const {
    struct Group {
      Creator code;
      int mult;
      V factor;
    };
    std::vector<Group> groups;
    for (std::size_t k = 0; k < part.size();) {
      std::size_t e = k;
      while (e < part.size() && part[e] == part[k]) ++e;
      groups.push_back(Group{part[k], static_cast<int>(e - k), coef(creator_index(part[k]), creator_depth(part[k]))});
      k = e;
    }
    std::vector<Removal> out;
    Removal cur{0, {}, one_};
    auto rec = [&](auto&& self, std::size_t g) -> void {
      if (g == groups.size()) {
        out.push_back(cur);
        return;
      }
      const Group& grp = groups[g];
      const std::size_t mark = cur.rest.size();
      const int depth = creator_depth(grp.code);
      const bool active = !is_zero_value(grp.factor);
      const int max_take = active ? grp.mult : 0;
      const Removal saved = cur;
      mpz_class binom = 1;
      V fpow = one_;
      for (int take = 0; take <= max_take; ++take) {
        if (take > 0) {
          binom = binom * (grp.mult - take + 1) / take;
          fpow *= grp.factor;
        }
        cur.rest.resize(mark);
        for (int k = 0; k < grp.mult - take; ++k) cur.rest.push_back(grp.code);
        cur.degree = saved.degree + take * depth;
        cur.coeff = take == 0 ? saved.coeff : saved.coeff * fpow * field_.from_rational(Rational(binom));
        self(self, g + 1);
      }
      cur = saved;
    };
    rec(rec, 0);
    return out;
  }

  /// inv_mult_factorial * prod 1/[k] for every partition of N (cached, thread-safe).
  const std::vector<V>& partition_factors(int N) const {
    const auto& pts = partitions(N);
    std::call_once(factor_once_[static_cast<std::size_t>(N)], [&] {
      std::vector<V> table;
      table.reserve(pts.size());
      for (const auto& pt : pts) {
        V c = field_.from_rational(pt.inv_mult_factorial);
        for (int k : pt.parts) c *= inv_qnum_[static_cast<std::size_t>(k)];
        table.push_back(std::move(c));
      }
      factor_table_[static_cast<std::size_t>(N)] = std::move(table);
    });
    return factor_table_[static_cast<std::size_t>(N)];
  }

  /// Coefficients of exp(sign * sum x(-k)/[k] (c z)^k) at total degree N, one per partition, with scale_N = c^N.
  std::vector<V> creation_factors(int sign, const V& scale_N, int N) const {
    const auto& pts = partitions(N);
    const auto& base = partition_factors(N);
    std::vector<V> out;
    out.reserve(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      V c = scale_N * base[k];
      if (sign < 0 && (pts[k].length % 2 == 1)) c = -c;
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Creation terms of total degree N on top of a removal, with per-partition factors from creation_factors.
  void add_creations(const Removal& rem, Family fam, int index, int N, const std::vector<V>& factors,
                     std::vector<Term>& out) const {
    const auto& pts = partitions(N);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      std::vector<Creator> created;
      created.reserve(pts[k].parts.size());
      for (int part : pts[k].parts) created.push_back(encode_creator(fam, index, part));
      out.push_back(Term{merge_sorted(rem.rest, created), V(rem.coeff * factors[k])});
    }
  }

  YData prepare_Y(int i, int sign, const FockState& s) const {
    YData y;
    y.e0 = sign * roots_.form_simple(i, s.point.lam);
    y.scalar = field_.monomial(eps_.simple(i, s.point.lam));
    auto [a_part, b_part] = split(s.creators);
    y.other = std::move(b_part);
    // annihilation coefficient -sign r^{-sign k/2} / [k] times the contraction
    auto coef = [&](int j, int k) {
      V c = field_.monomial(rs_monomial(Rational(-sign * k, 2), 0)) * inv_qnum_.at(static_cast<std::size_t>(k)) *
            heis_.at(i, j, k);
      return sign > 0 ? V(-c) : c;
    };
    y.removals = removals(a_part, coef);
    for (const auto& r : y.removals) y.max_removed = std::max(y.max_removed, r.degree);
    y.point = s.point;
    y.point.lam[static_cast<std::size_t>(i - 1)] += sign;
    return y;
  }

  std::vector<Term> y_terms(const YData& y, int i, int sign, int t) const {
    std::vector<Term> out;
    std::map<int, std::vector<V>> factors;
    for (const auto& rem : y.removals) {
      const int N = t + rem.degree;
      if (N < 0) continue;
      auto it = factors.find(N);
      if (it == factors.end())
        it = factors.emplace(N, creation_factors(sign, field_.monomial(rs_monomial(0, Rational(sign * N, 2))), N)).first;
      add_creations(rem, Family::A, i, N, it->second, out);
    }
    return out;
  }

  UData prepare_U(int j, int eta, const Monomial& c, const FockState& s) const {
    UData u;
    u.c = c;
    const Rational zero_mode_b = roots_.form_tilde_simple(j, s.point.lam_tilde);
    u.e0 = eta * zero_mode_b;
    u.scalar = rs_eighth_inv_ * field_.monomial(monomial_pow(c, u.e0));
    auto [a_part, b_part] = split(s.creators);
    u.other = std::move(a_part);
    auto coef = [&](int jj, int k) {
      V v = field_.monomial(monomial_ipow(c, -k)) * inv_qnum_.at(static_cast<std::size_t>(k)) * heis_.at(j, jj, k);
      return eta > 0 ? V(-v) : v;
    };
    u.removals = removals(b_part, coef);
    for (const auto& r : u.removals) u.max_removed = std::max(u.max_removed, r.degree);
    u.lam_tilde = s.point.lam_tilde;
    u.lam_tilde[static_cast<std::size_t>(j - 1)] += eta;
    return u;
  }

  std::vector<Term> u_terms(const UData& u, int j, int eta, int t) const {
    std::vector<Term> out;
    std::map<int, std::vector<V>> factors;
    for (const auto& rem : u.removals) {
      const int N = t + rem.degree;
      if (N < 0) continue;
      auto it = factors.find(N);
      if (it == factors.end()) it = factors.emplace(N, creation_factors(eta, field_.monomial(monomial_ipow(u.c, N)), N)).first;
      add_creations(rem, Family::B, j, N, it->second, out);
    }
    return out;
  }

  /// Coefficient of z^T in X_i^sign(z) applied to s.
  Vec x_coefficient(int i, int sign, int T, const FockState& s) const {
    Vec out = x_coefficient_raw(i, sign, T, s);
    if (sign < 0 && conv_.normalize_lowering) out.scale_in_place(lowering_[static_cast<std::size_t>(i)]);
    return out;
  }

  Vec x_coefficient_raw(int i, int sign, int T, const FockState& s) const {
    Vec out;
    const YData y = prepare_Y(i, sign, s);
    if (i == rank()) {
      const Rational d = Rational(T) - y.e0;
      if (!is_integer(d)) throw ArithmeticError("non-integral z-exponent in X_n on " + s.to_string());
      for (const auto& term : y_terms(y, i, sign, static_cast<int>(to_long(d)))) {
        FockState st;
        st.creators = term.creators;
        st.creators.insert(st.creators.end(), y.other.begin(), y.other.end());
        st.point = y.point;
        out.add(std::move(st), V(term.coeff * y.scalar));
      }
      return out;
    }
    std::map<int, std::vector<Term>> y_cache;
    for (int eta : {1, -1}) {
      UData u = prepare_U(i, eta, z_scale(sign, eta), s);
      V scalar = y.scalar * u.scalar;
      const bool signed_branch = sign > 0 ? eta < 0 : (conv_.mirror_lowering_sign ? eta > 0 : eta < 0);
      if (signed_branch) {
        FockState label = s;
        if (conv_.sign_after_shift) label.point = y.point;
        if (sign_op(roots_, i, label) < 0) scalar = -scalar;
      }
      const Rational dr = Rational(T) - y.e0 - u.e0;
      if (!is_integer(dr)) throw ArithmeticError("non-integral z-exponent in X_" + std::to_string(i) + " on " + s.to_string());
      const int D = static_cast<int>(to_long(dr));
      for (int ty = -y.max_removed; ty <= D + u.max_removed; ++ty) {
        const int tu = D - ty;
        auto it = y_cache.find(ty);
        if (it == y_cache.end()) it = y_cache.emplace(ty, y_terms(y, i, sign, ty)).first;
        if (it->second.empty()) continue;
        const std::vector<Term> uterms = u_terms(u, i, eta, tu);
        for (const auto& yt : it->second) {
          const V ys = yt.coeff * scalar;
          for (const auto& ut : uterms) {
            FockState st;
            st.creators.reserve(yt.creators.size() + ut.creators.size());
            st.creators = yt.creators;
            st.creators.insert(st.creators.end(), ut.creators.begin(), ut.creators.end());
            st.point.lam = y.point.lam;
            st.point.lam_tilde = u.lam_tilde;
            out.add(std::move(st), V(ys * ut.coeff));
          }
        }
      }
    }
    return out;
  }
};

extern template class VertexEngine<SymbolicField>;
extern template class VertexEngine<NumericField>;

}  // namespace uqrs
