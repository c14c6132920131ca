/**
 * @file fock.hpp
 * @brief The level-one Fock space: two families of free bosons a_i (1 <= i <= n)
 * and b_j (1 <= j < n) over the root-lattice sectors (lambda, tilde lambda),
 * with exact actions of boson modes, zero modes, shifts, torus elements,
 * cocycle operators and sign operators.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uqrs/cartan.hpp"
#include "uqrs/field.hpp"

namespace uqrs {

enum class Family : std::uint8_t { A = 0, B = 1 };

/// A boson mode a_i(m) or b_i(m) with m != 0.
struct BosonMode {
  Family family = Family::A;
  int index = 1;
  int degree = -1;
};

/// A creation mode packed as family << 12 | index << 6 | (-degree).
using Creator = std::uint16_t;

inline Creator encode_creator(Family f, int index, int depth) {
  return static_cast<Creator>((static_cast<int>(f) << 12) | (index << 6) | depth);
}
inline Family creator_family(Creator c) { return static_cast<Family>(c >> 12); }
inline int creator_index(Creator c) { return (c >> 6) & 63; }
/// The positive integer k of the creation mode x(-k).
inline int creator_depth(Creator c) { return c & 63; }
inline constexpr int kMaxDepth = 63;
/// Largest mode degree for which contraction constants and creation polynomials are tabulated.
inline constexpr int kTableDepth = 24;

/// A basis vector: a monomial in creation modes (sorted) tensored with e^lambda e^{tilde lambda}.
struct FockState {
  std::vector<Creator> creators;
  LatticePoint point;

  bool operator==(const FockState& o) const { return creators == o.creators && point == o.point; }
  bool operator<(const FockState& o) const {
    if (creators != o.creators) return creators < o.creators;
    return point < o.point;
  }
  std::size_t hash() const;
  /// e.g. "a1(-2) b1(-1) | lam=[1,0] lamTilde=[1]".
  std::string to_string() const;
};

struct FockStateHash {
  std::size_t operator()(const FockState& s) const { return s.hash(); }
};

/// The vacuum |0, 0> of rank n.
FockState vacuum_state(int n);

/// A finite linear combination of basis states; zero coefficients are never stored.
template <class V>
class FockVector {
 public:
  using Map = std::map<FockState, V>;

  FockVector() = default;
  static FockVector basis(const FockState& s, const V& c) {
    FockVector v;
    v.add(s, c);
    return v;
  }

  void add(const FockState& s, const V& c) {
    if (is_zero_value(c)) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  void add(FockState&& s, V&& c) {
    if (is_zero_value(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(s), std::move(c));
    if (!inserted) {
      it->second += c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  /// this += c * other.
  void axpy(const V& c, const FockVector& other) {
    if (is_zero_value(c)) return;
    for (const auto& [s, x] : other.terms_) add(s, c * x);
  }
  void add_vector(const FockVector& other) {
    for (const auto& [s, x] : other.terms_) add(s, x);
  }
  /// this *= c; c must be nonzero.
  void scale_in_place(const V& c) {
    for (auto& entry : terms_) entry.second *= c;
  }
  FockVector scaled(const V& c) const {
    if (is_zero_value(c)) return FockVector();
    FockVector out = *this;
    out.scale_in_place(c);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

  std::string to_string(std::size_t max_terms = 6) const {
    if (terms_.empty()) return "0";
    std::string out;
    std::size_t k = 0;
    for (const auto& [s, x] : terms_) {
      if (k == max_terms) {
        out += " + ... (" + std::to_string(terms_.size()) + " terms)";
        break;
      }
      if (k++) out += " + ";
      out += "(" + value_to_string(x) + ")*[" + s.to_string() + "]";
    }
    return out;
  }

 private:
  Map terms_;
};

/// C_ij(m) = (rs)^{m/2} (rs)^{-m(alpha_i|alpha_j)/2} [m(alpha_i|alpha_j)] (r^m - s^m) / (m (r - s)), m > 0.
Scalar heisenberg_constant(const RootData& roots, int i, int j, int m);

/// The commutator [a_i(l), a_j(-l)] for any l != 0 (and the same for b with i, j < n).
Scalar heisenberg_commutator(const RootData& roots, int i, int j, int l);

/// Contraction constants lifted to a coefficient field, tabulated for 1 <= m <= kTableDepth.
template <class Field>
class HeisenbergTable {
 public:
  using V = typename Field::value_type;
  HeisenbergTable(const RootData& roots, const Field& field) : n_(roots.rank()) {
    table_.resize(static_cast<std::size_t>(n_ * n_ * (kTableDepth + 1)));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        for (int m = 1; m <= kTableDepth; ++m) table_[slot(i, j, m)] = field.lift(heisenberg_constant(roots, i, j, m));
  }
  const V& at(int i, int j, int m) const {
    if (m < 1 || m > kTableDepth) throw std::out_of_range("mode degree outside the tabulated range");
    return table_[slot(i, j, m)];
  }

 private:
  int n_;
  std::vector<V> table_;
  std::size_t slot(int i, int j, int m) const {
    return static_cast<std::size_t>(((i - 1) * n_ + (j - 1)) * (kTableDepth + 1) + m);
  }
};

/// Eigenvalue (alpha_i|lambda) of a_i(0), or (tilde alpha_i|tilde lambda) of b_i(0).
Rational zero_mode(const RootData& roots, int i, Family family, const FockState& s);

/// (-1)^{2(alpha_j|lambda)}; throws when 2(alpha_j|lambda) is not an integer.
int sign_op(const RootData& roots, int j, const FockState& s);

/// Sum over creators of d_index * depth, with b-modes weighted 1/2.
Rational weighted_degree(const RootData& roots, const FockState& s);

/// Sum of creator depths: every boson a_i(-k), b_j(-k) has degree k (the z-grading of the vertex operators).
long principal_degree(const FockState& s);

/// Inserts a creation mode keeping the canonical order.
void insert_creator(std::vector<Creator>& creators, Creator c);

/// Translates the lattice labels; throws ArithmeticError when the result violates admissibility.
FockState shift_state(const RootData& roots, const FockState& s, const RootVector& alpha, const TildeVector& alpha_tilde);

/// Applies a boson mode: creation inserts, annihilation acts as the derivation with constants C.
template <class Field>
FockVector<typename Field::value_type> apply_boson(const RootData& roots, const HeisenbergTable<Field>& heis,
                                                   const Field& field, const BosonMode& mode,
                                                   const FockVector<typename Field::value_type>& v) {
  using V = typename Field::value_type;
  FockVector<V> out;
  if (mode.degree == 0) throw std::invalid_argument("boson mode of degree 0");
  if (mode.family == Family::B && mode.index >= roots.rank()) throw std::invalid_argument("b-family index must be < n");
  for (const auto& [s, c] : v) {
    if (mode.degree < 0) {
      if (-mode.degree > kTableDepth) throw std::out_of_range("creation depth exceeds the supported range");
      FockState t = s;
      insert_creator(t.creators, encode_creator(mode.family, mode.index, -mode.degree));
      out.add(t, c);
      continue;
    }
    const auto& cr = s.creators;
    for (std::size_t k = 0; k < cr.size();) {
      std::size_t e = k;
      while (e < cr.size() && cr[e] == cr[k]) ++e;
      if (creator_family(cr[k]) == mode.family && creator_depth(cr[k]) == mode.degree) {
        const V& contraction = heis.at(mode.index, creator_index(cr[k]), mode.degree);
        if (!is_zero_value(contraction)) {
          FockState t = s;
          t.creators.erase(t.creators.begin() + static_cast<std::ptrdiff_t>(k));
          out.add(t, c * contraction * field.from_rational(Rational(static_cast<long>(e - k))));
        }
      }
      k = e;
    }
  }
  return out;
}

/// Lattice translation applied to every basis state.
template <class V>
FockVector<V> apply_shift(const RootData& roots, const RootVector& alpha, const TildeVector& alpha_tilde,
                          const FockVector<V>& v) {
  FockVector<V> out;
  for (const auto& [s, c] : v) out.add(shift_state(roots, s, alpha, alpha_tilde), c);
  return out;
}

/// omega_i acts by <lambda, i>, omega'_i by <i, lambda>^{-1}.
template <class Field>
FockVector<typename Field::value_type> apply_omega(const StructConsts& sc, const Field& field, int i, bool primed,
                                                   const FockVector<typename Field::value_type>& v) {
  FockVector<typename Field::value_type> out;
  for (const auto& [s, c] : v) {
    const Monomial eig = primed ? sc.pairing_rev(i, s.point.lam).inverse() : sc.pairing(s.point.lam, i);
    out.add(s, c * field.monomial(eig));
  }
  return out;
}

/// epsilon_alpha acts by epsilon(alpha, lambda).
template <class Field>
FockVector<typename Field::value_type> apply_eps(const Cocycle& eps, const Field& field, const RootVector& alpha,
                                                 const FockVector<typename Field::value_type>& v) {
  FockVector<typename Field::value_type> out;
  for (const auto& [s, c] : v) out.add(s, c * field.monomial(eps.eval(alpha, s.point.lam)));
  return out;
}

}  // namespace uqrs
