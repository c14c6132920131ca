#include "uqrs/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uqrs {

namespace {

std::atomic<std::uint64_t> next_op_id{1};

std::shared_ptr<OpNode> make_node(OpKind kind, std::string label) {
  auto node = std::make_shared<OpNode>();
  node->kind = kind;
  node->id = next_op_id.fetch_add(1);
  node->label = std::move(label);
  return node;
}

std::string sign_char(int sign) { return sign > 0 ? "+" : "-"; }

}  // namespace

Op op_identity() { return make_node(OpKind::Identity, "1"); }

Op op_mode(int i, int sign, int k) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("mode sign must be +1 or -1");
  auto node = make_node(OpKind::Mode, "x" + std::to_string(i) + sign_char(sign) + "(" + std::to_string(k) + ")");
  node->index = i;
  node->sign = sign;
  node->degree = k;
  return node;
}

Op op_boson(Family family, int i, int l) {
  if (l == 0) throw std::invalid_argument("boson mode of degree 0");
  auto node = make_node(OpKind::Boson, std::string(family == Family::A ? "a" : "b") + std::to_string(i) + "(" +
                                           std::to_string(l) + ")");
  node->family = family;
  node->index = i;
  node->degree = l;
  return node;
}

Op op_torus(std::vector<int> e, std::vector<int> f, std::string label) {
  if (e.size() != f.size()) throw std::invalid_argument("torus exponent vectors differ in length");
  auto node = make_node(OpKind::Torus, label.empty() ? "torus" : std::move(label));
  node->omega = std::move(e);
  node->omega_prime = std::move(f);
  return node;
}

Op op_omega(int n, int i, int power, bool primed) {
  std::vector<int> e(static_cast<std::size_t>(n), 0), f(static_cast<std::size_t>(n), 0);
  (primed ? f : e).at(static_cast<std::size_t>(i - 1)) = power;
  return op_torus(std::move(e), std::move(f),
                  std::string(primed ? "w'" : "w") + std::to_string(i) + "^" + std::to_string(power));
}

Op op_psi(int i, int m) {
  if (m < 0) throw std::invalid_argument("psi_i(m) requires m >= 0");
  auto node = make_node(OpKind::Psi, "psi" + std::to_string(i) + "(" + std::to_string(m) + ")");
  node->index = i;
  node->degree = m;
  return node;
}

Op op_phi(int i, int m) {
  if (m > 0) throw std::invalid_argument("phi_i(m) requires m <= 0");
  auto node = make_node(OpKind::Phi, "phi" + std::to_string(i) + "(" + std::to_string(m) + ")");
  node->index = i;
  node->degree = m;
  return node;
}

Op op_scale(const Scalar& c, const Op& a) {
  auto node = make_node(OpKind::Scale, "(" + c.to_string() + ")*" + a->label);
  node->coeff = c;
  node->children = {a};
  return node;
}

Op op_sum(const std::vector<std::pair<Scalar, Op>>& terms) {
  std::string label;
  for (const auto& [w, a] : terms) label += (label.empty() ? "" : " + ") + ("(" + w.to_string() + ")" + a->label);
  auto node = make_node(OpKind::Sum, label.empty() ? "0" : label);
  for (const auto& [w, a] : terms) {
    node->weights.push_back(w);
    node->children.push_back(a);
  }
  return node;
}

Op op_compose(const Op& a, const Op& b) {
  auto node = make_node(OpKind::Compose, a->label + " " + b->label);
  node->children = {a, b};
  return node;
}

Op op_product(const std::vector<Op>& factors) {
  if (factors.empty()) return op_identity();
  Op out = factors.back();
  for (std::size_t k = factors.size() - 1; k-- > 0;) out = op_compose(factors[k], out);
  return out;
}

Op operator+(const Op& a, const Op& b) { return op_sum({{Scalar(1L), a}, {Scalar(1L), b}}); }
Op operator-(const Op& a, const Op& b) { return op_sum({{Scalar(1L), a}, {Scalar(-1L), b}}); }
Op operator*(const Op& a, const Op& b) { return op_compose(a, b); }
Op operator*(const Scalar& c, const Op& a) { return op_scale(c, a); }

Op qbracket(const Op& a, const Op& b, const Scalar& v) {
  auto node = make_node(OpKind::Bracket, "[" + a->label + ", " + b->label + "]_{" + v.to_string() + "}");
  node->coeff = v;
  node->children = {a, b};
  return node;
}

Op commutator(const Op& a, const Op& b) { return qbracket(a, b, Scalar(1L)); }

Op nested_bracket(const std::vector<Op>& items, const std::vector<Scalar>& twists, Nesting nesting) {
  if (items.empty()) throw std::invalid_argument("nested bracket of an empty list");
  if (twists.size() + 1 != items.size()) throw std::invalid_argument("nested bracket needs exactly one twist per adjacent pair");
  if (nesting == Nesting::Right) {
    Op out = items.back();
    std::size_t t = 0;
    for (std::size_t k = items.size() - 1; k-- > 0;) out = qbracket(items[k], out, twists[t++]);
    return out;
  }
  Op out = items.front();
  for (std::size_t k = 1; k < items.size(); ++k) out = qbracket(out, items[k], twists[k - 1]);
  return out;
}

Op symmetrize(const std::vector<int>& degrees, const std::function<Op(const std::vector<int>&)>& word) {
  std::vector<int> d = degrees;
  std::sort(d.begin(), d.end());
  // each distinct ordering stands for prod m_k! equal orderings
  long weight = 1;
  for (std::size_t k = 0, run = 1; k < d.size(); ++k) {
    run = (k > 0 && d[k] == d[k - 1]) ? run + 1 : 1;
    weight *= static_cast<long>(run);
  }
  std::vector<std::pair<Scalar, Op>> terms;
  do {
    terms.emplace_back(Scalar(Rational(weight)), word(d));
  } while (std::next_permutation(d.begin(), d.end()));
  return op_sum(terms);
}

std::vector<FockState> generate_test_states(const RootData& roots, const Rational& max_degree, int max_shifts) {
  const int n = roots.rank();
  // lattice points by breadth-first search over the X-operator shifts
  std::vector<std::vector<LatticePoint>> layers(1);
  std::set<LatticePoint> seen;
  layers[0].push_back(vacuum_state(n).point);
  seen.insert(layers[0][0]);
  for (int step = 0; step < max_shifts; ++step) {
    std::set<LatticePoint> next;
    for (const auto& p : layers.back()) {
      for (int i = 1; i <= n; ++i) {
        for (int sigma : {1, -1}) {
          for (int eta : {1, -1}) {
            if (i == n && eta < 0) continue;
            LatticePoint q = p;
            q.lam[static_cast<std::size_t>(i - 1)] += sigma;
            if (i < n) q.lam_tilde[static_cast<std::size_t>(i - 1)] += eta;
            if (!is_admissible(roots, q) || seen.count(q)) continue;
            next.insert(q);
          }
        }
      }
    }
    seen.insert(next.begin(), next.end());
    layers.emplace_back(next.begin(), next.end());
  }
  // boson monomials with weighted degree <= max_degree, in half units
  const Rational twice = 2 * max_degree;
  mpz_class floor_twice;
  mpz_fdiv_q(floor_twice.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  const long budget = floor_twice.get_si();
  std::vector<std::pair<Creator, int>> kinds;
  for (int i = 1; i <= n; ++i) {
    const int unit = i == n ? 2 : 1;
    for (int k = 1; k * unit <= budget && k <= kTableDepth; ++k) kinds.emplace_back(encode_creator(Family::A, i, k), k * unit);
  }
  for (int j = 1; j < n; ++j)
    for (int k = 1; k <= budget && k <= kTableDepth; ++k) kinds.emplace_back(encode_creator(Family::B, j, k), k);
  std::sort(kinds.begin(), kinds.end());
  std::vector<std::pair<long, std::vector<Creator>>> monomials;
  std::vector<Creator> cur;
  auto rec = [&](auto&& self, std::size_t from, long used) -> void {
    monomials.emplace_back(used, cur);
    for (std::size_t k = from; k < kinds.size(); ++k) {
      if (used + kinds[k].second > budget) continue;
      cur.push_back(kinds[k].first);
      self(self, k, used + kinds[k].second);
      cur.pop_back();
    }
  };
  if (budget >= 0) rec(rec, 0, 0);
  std::stable_sort(monomials.begin(), monomials.end(),
                   [](const auto& a, const auto& b) { return a.first != b.first ? a.first < b.first : a.second < b.second; });
  std::vector<FockState> out;
  for (const auto& layer : layers)
    for (const auto& p : layer)
      for (const auto& m : monomials) {
        FockState s;
        s.creators = m.second;
        s.point = p;
        out.push_back(std::move(s));
      }
  return out;
}

template <class Field>
RelationReport run_identities(const VertexEngine<Field>& engine, const std::vector<OperatorIdentity>& identities,
                              const std::vector<FockState>& states, bool parallel) {
  struct Item {
    std::size_t identity;
    const FockState* state;
  };
  std::vector<Item> items;
  std::vector<std::size_t> first(identities.size() + 1, 0);
  for (std::size_t k = 0; k < identities.size(); ++k) {
    first[k] = items.size();
    const auto& list = identities[k].states.empty() ? states : identities[k].states;
    for (const auto& s : list) items.push_back(Item{k, &s});
  }
  first[identities.size()] = items.size();
  std::vector<StateOutcome> outcomes(items.size());

  auto check = [&](Evaluator<Field>& ev, std::size_t idx) {
    const Item& item = items[idx];
    const OperatorIdentity& id = identities[item.identity];
    try {
      const auto lhs = ev.evaluate(id.lhs, *item.state);
      const auto rhs = ev.evaluate(id.rhs, *item.state);
      if (!(*lhs == *rhs))
        outcomes[idx] = StateOutcome{false, "state [" + item.state->to_string() + "]: lhs = " + lhs->to_string() +
                                                 "; rhs = " + rhs->to_string()};
    } catch (const std::exception& e) {
      outcomes[idx] = StateOutcome{false, "state [" + item.state->to_string() + "]: error: " + e.what()};
    }
  };

  const long count = static_cast<long>(items.size());
  if (parallel) {
#pragma omp parallel
    {
      Evaluator<Field> ev(engine);
#pragma omp for schedule(dynamic, 4)
      for (long idx = 0; idx < count; ++idx) check(ev, static_cast<std::size_t>(idx));
    }
  } else {
    Evaluator<Field> ev(engine);
    for (long idx = 0; idx < count; ++idx) check(ev, static_cast<std::size_t>(idx));
  }

  RelationReport report;
  for (std::size_t k = 0; k < identities.size(); ++k) {
    bool ok = true;
    std::string detail;
    std::size_t failing = 0;
    for (std::size_t idx = first[k]; idx < first[k + 1]; ++idx) {
      if (outcomes[idx].passed) continue;
      if (ok) detail = outcomes[idx].witness;
      ok = false;
      ++failing;
    }
    const std::size_t total = first[k + 1] - first[k];
    if (ok)
      detail = std::to_string(total) + " states";
    else
      detail = std::to_string(failing) + "/" + std::to_string(total) + " states fail; first " + detail;
    report.add(identities[k].name, ok, detail, identities[k].informational);
  }
  return report;
}

template RelationReport run_identities(const VertexEngine<SymbolicField>&, const std::vector<OperatorIdentity>&,
                                       const std::vector<FockState>&, bool);
template RelationReport run_identities(const VertexEngine<NumericField>&, const std::vector<OperatorIdentity>&,
                                       const std::vector<FockState>&, bool);

template class Evaluator<SymbolicField>;
template class Evaluator<NumericField>;

}  // namespace uqrs
