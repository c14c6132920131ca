/**
 * @file algebra.hpp
 * @brief Operator expressions over the Fock space (modes, bosons, torus
 * elements, sums, compositions, twisted brackets), their memoized exact
 * evaluation, and the parallel and serial identity runners behind every
 * relation suite.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uqrs/report.hpp"
#include "uqrs/vertex.hpp"

namespace uqrs {

enum class OpKind { Identity, Mode, Boson, Torus, Psi, Phi, Scale, Sum, Compose, Bracket };

struct OpNode;
using Op = std::shared_ptr<const OpNode>;

/// An immutable node of an operator expression; every node carries a unique id used for memoization.
struct OpNode {
  OpKind kind = OpKind::Identity;
  std::uint64_t id = 0;
  std::string label;
  int index = 0;
  int sign = 0;
  int degree = 0;
  Family family = Family::A;
  /// Torus exponents: omega_i^{e_i} omega'_i^{f_i}, i = 1..n.
  std::vector<int> omega, omega_prime;
  /// Scale factor, or bracket twist.
  Scalar coeff;
  std::vector<Op> children;
  std::vector<Scalar> weights;
};

Op op_identity();
/// x_i^sign(k).
Op op_mode(int i, int sign, int k);
/// a_i(l) or b_i(l), l != 0.
Op op_boson(Family family, int i, int l);
/// prod omega_i^{e_i} omega'_i^{f_i}.
Op op_torus(std::vector<int> e, std::vector<int> f, std::string label = {});
Op op_omega(int n, int i, int power, bool primed);
Op op_psi(int i, int m);
Op op_phi(int i, int m);
Op op_scale(const Scalar& c, const Op& a);
/// sum_k w_k A_k.
Op op_sum(const std::vector<std::pair<Scalar, Op>>& terms);
/// A B (B acts first).
Op op_compose(const Op& a, const Op& b);
/// A_1 A_2 ... A_m (A_m acts first).
Op op_product(const std::vector<Op>& factors);
Op operator+(const Op& a, const Op& b);
Op operator-(const Op& a, const Op& b);
Op operator*(const Op& a, const Op& b);
Op operator*(const Scalar& c, const Op& a);

/// [A, B]_v = A B - v B A.
Op qbracket(const Op& a, const Op& b, const Scalar& v);
/// [A, B] = A B - B A.
Op commutator(const Op& a, const Op& b);

enum class Nesting { Right, Left };

/**
 * @brief [a_1, ..., a_s]_{(v_1, ..., v_{s-1})} (right: [a_1, [a_2, ..., [a_{s-1}, a_s]_{v_1} ...]]) or
 * [a_1, ..., a_s]_{<v_1, ..., v_{s-1}>} (left: [[[a_1, a_2]_{v_1}, a_3]_{v_2} ...]).
 * @throws std::invalid_argument on an empty list or a twist count other than s - 1.
 */
Op nested_bracket(const std::vector<Op>& items, const std::vector<Scalar>& twists, Nesting nesting);

/**
 * @brief Sum over all orderings of the listed mode degrees substituted into a word
 * pattern; equal orderings are merged into one term with their multiplicity.
 */
Op symmetrize(const std::vector<int>& degrees, const std::function<Op(const std::vector<int>&)>& word);

/// Exact evaluation of operator expressions on Fock vectors with a per-instance memo.
template <class Field>
class Evaluator {
 public:
  using V = typename Field::value_type;
  using Vec = FockVector<V>;

  explicit Evaluator(const VertexEngine<Field>& engine, std::size_t memo_cap = 60000)
      : engine_(engine), memo_cap_(memo_cap) {}

  Vec apply(const Op& op, const Vec& v) {
    Vec out;
    for (const auto& [s, c] : v) out.axpy(c, *eval(op, s));
    return out;
  }

  Vec apply(const Op& op, const FockState& s) { return *eval(op, s); }

  /// The result of op on s, shared with the memo (no copy).
  std::shared_ptr<const Vec> evaluate(const Op& op, const FockState& s) { return eval(op, s); }

  const VertexEngine<Field>& engine() const { return engine_; }

 private:
  struct Key {
    std::uint64_t id;
    FockState state;
    bool operator==(const Key& o) const { return id == o.id && state == o.state; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.state.hash() ^ (k.id * 0x9e3779b97f4a7c15ULL); }
  };

  const VertexEngine<Field>& engine_;
  std::size_t memo_cap_;
  using Shared = std::shared_ptr<const Vec>;
  std::unordered_map<Key, Shared, KeyHash> memo_;
  std::unordered_map<std::uint64_t, V> lifted_;
  /// Torus eigenvalues keyed by operator id and lattice point (creators left empty).
  std::unordered_map<Key, V, KeyHash> eigenvalues_;

  Shared eval(const Op& op, const FockState& s) {
    const bool memoized = op->kind == OpKind::Mode || op->kind == OpKind::Compose || op->kind == OpKind::Bracket ||
                          op->kind == OpKind::Sum || op->kind == OpKind::Psi || op->kind == OpKind::Phi;
    if (!memoized) return std::make_shared<const Vec>(compute(op, s));
    Key key{op->id, s};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Shared out = std::make_shared<const Vec>(compute(op, s));
    if (memo_.size() >= memo_cap_) memo_.clear();
    memo_.emplace(std::move(key), out);
    return out;
  }

  const V& lift(const Scalar& c, std::uint64_t slot) {
    auto it = lifted_.find(slot);
    if (it == lifted_.end()) it = lifted_.emplace(slot, engine_.field().lift(c)).first;
    return it->second;
  }

  Vec compute(const Op& op, const FockState& s) {
    const Field& field = engine_.field();
    switch (op->kind) {
      case OpKind::Identity:
        return Vec::basis(s, field.from_rational(Rational(1)));
      case OpKind::Mode:
        return engine_.mode(op->index, op->sign, op->degree, s);
      case OpKind::Boson:
        return apply_boson(engine_.roots(), engine_.heisenberg(), field, BosonMode{op->family, op->index, op->degree},
                           Vec::basis(s, field.from_rational(Rational(1))));
      case OpKind::Torus: {
        FockState sector;
        sector.point = s.point;
        Key key{op->id, std::move(sector)};
        auto it = eigenvalues_.find(key);
        if (it == eigenvalues_.end())
          it = eigenvalues_.emplace(std::move(key), engine_.torus_eigenvalue(op->omega, op->omega_prime, s)).first;
        return Vec::basis(s, it->second);
      }
      case OpKind::Psi:
        return engine_.psi(op->index, op->degree, s);
      case OpKind::Phi:
        return engine_.phi(op->index, op->degree, s);
      case OpKind::Scale: {
        const V& c = lift(op->coeff, op->id << 8);
        return eval(op->children[0], s)->scaled(c);
      }
      case OpKind::Sum: {
        Vec out;
        for (std::size_t k = 0; k < op->children.size(); ++k)
          out.axpy(lift(op->weights[k], (op->id << 8) | (k + 1)), *eval(op->children[k], s));
        return out;
      }
      case OpKind::Compose:
        return apply(op->children[0], *eval(op->children[1], s));
      case OpKind::Bracket: {
        Vec out = apply(op->children[0], *eval(op->children[1], s));
        const V& v = lift(op->coeff, op->id << 8);
        if (!is_zero_value(v)) out.axpy(-v, apply(op->children[1], *eval(op->children[0], s)));
        return out;
      }
    }
    throw std::logic_error("unknown operator kind");
  }
};

/// An operator identity lhs = rhs to be checked on test states.
struct OperatorIdentity {
  std::string name;
  Op lhs;
  Op rhs;
  bool informational = false;
  /// Restricts the check to these states when nonempty.
  std::vector<FockState> states;
};

/// Outcome of one identity on one state.
struct StateOutcome {
  bool passed = true;
  std::string witness;
};

/**
 * @brief Checks every identity on every state. The parallel runner distributes
 * (identity, state) pairs over OpenMP threads with one evaluator per thread; the
 * serial runner is the reference. Results are merged in identity order.
 */
template <class Field>
RelationReport run_identities(const VertexEngine<Field>& engine, const std::vector<OperatorIdentity>& identities,
                              const std::vector<FockState>& states, bool parallel);

/// Enumeration of admissible test states.
struct StateWindow {
  Rational max_degree = 2;
  int max_shifts = 1;
};

/**
 * @brief All basis states of weighted degree <= max_degree over the lattice
 * points reachable from the vacuum by at most max_shifts steps (+-alpha_i, +-tilde alpha_i)
 * (tilde alpha_n = 0), in a deterministic order.
 */
std::vector<FockState> generate_test_states(const RootData& roots, const Rational& max_degree, int max_shifts);

extern template class Evaluator<SymbolicField>;
extern template class Evaluator<NumericField>;

}  // namespace uqrs
