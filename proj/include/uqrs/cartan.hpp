/**
 * @file cartan.hpp
 * @brief Root data of C_n and its affinization, the structural-constant matrix,
 * the A_{n-1} sublattice with its mod-2 projection, and the quasi-cocycle.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "uqrs/report.hpp"
#include "uqrs/scalar.hpp"

namespace uqrs {

/// An element of the root lattice Q, as integer coefficients over alpha_1..alpha_n.
using RootVector = std::vector<int>;
/// An element of the A_{n-1} lattice, as integer coefficients over tilde alpha_1..tilde alpha_{n-1}.
using TildeVector = std::vector<int>;

/// Bilinear form, Cartan matrix and highest root of C_n^(1); indices 0..n.
class RootData {
 public:
  explicit RootData(int n);

  int rank() const { return n_; }
  /// Symmetrizer d_i with (d_0, d_1, ..., d_n) = (1, 1/2, ..., 1/2, 1).
  const Rational& d(int i) const { return d_.at(static_cast<std::size_t>(i)); }
  /// (alpha_i | alpha_j) for 0 <= i, j <= n.
  const Rational& form(int i, int j) const { return form_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  /// Cartan integer a_ij = (alpha_i | alpha_j) / d_i.
  int cartan(int i, int j) const;
  /// Coefficients of the highest root over alpha_1..alpha_n: (2, ..., 2, 1).
  const RootVector& theta() const { return theta_; }

  /// (alpha_i | x) for 1 <= i <= n.
  Rational form_simple(int i, const RootVector& x) const;
  /// (x | y) on Q.
  Rational form(const RootVector& x, const RootVector& y) const;
  /// (tilde alpha_i | y) with tilde alpha_n = 0.
  Rational form_tilde_simple(int i, const TildeVector& y) const;
  /// (x | y) on the A_{n-1} lattice: delta_ij - delta_{|i-j|,1} / 2.
  Rational form_tilde(const TildeVector& x, const TildeVector& y) const;
  /// True when alpha_i + alpha_j is a root (1 <= i != j <= n adjacent).
  bool sum_is_root(int i, int j) const;

  /// Simple root alpha_i as a coefficient vector (1 <= i <= n).
  RootVector simple(int i) const;
  /// Tilde alpha_i as a coefficient vector (zero for i = n).
  TildeVector simple_tilde(int i) const;

 private:
  int n_;
  std::vector<Rational> d_;
  std::vector<std::vector<Rational>> form_;
  RootVector theta_;
};

/// Signed monomial power with an integer exponent.
Monomial monomial_ipow(const Monomial& m, long e);

/// The (n+1) x (n+1) matrix <i, j> = <omega'_i, omega_j>.
class StructConsts {
 public:
  explicit StructConsts(const RootData& roots);

  const RootData& roots() const { return roots_; }
  const Monomial& at(int i, int j) const { return table_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  /// <beta, i> = prod_j <j, i>^{c_j} for beta = sum_j c_j alpha_j (j >= 1).
  Monomial pairing(const RootVector& beta, int i) const;
  /// <i, beta> = prod_j <i, j>^{c_j}.
  Monomial pairing_rev(int i, const RootVector& beta) const;

 private:
  RootData roots_;
  std::vector<std::vector<Monomial>> table_;
};

/// A lattice label (lambda, tilde lambda) of the Fock space.
struct LatticePoint {
  RootVector lam;
  TildeVector lam_tilde;

  bool operator==(const LatticePoint& o) const { return lam == o.lam && lam_tilde == o.lam_tilde; }
  bool operator<(const LatticePoint& o) const {
    return lam != o.lam ? lam < o.lam : lam_tilde < o.lam_tilde;
  }
};

/// (alpha_i | lambda) +- (tilde alpha_i | tilde lambda) are integers for every i.
bool is_admissible(const RootData& roots, const LatticePoint& point);

/// Coefficients reduced mod 2 into {0, 1}, with the n-th coordinate dropped.
TildeVector bar_project(const RootVector& lam);

/**
 * @brief The quasi-cocycle epsilon on Q x Q with values +-(p, q monomials).
 *
 * The base table is fixed on simple roots; evaluation extends it
 * multiplicatively in the second argument and through the sign-corrected rule
 * in the first argument, decomposing the first argument left to right.
 */
class Cocycle {
 public:
  explicit Cocycle(const RootData& roots);

  const Monomial& base(int i, int j) const { return base_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }
  /// epsilon(alpha_i, beta) (multiplicative in beta).
  Monomial simple(int i, const RootVector& beta) const;
  /// epsilon(alpha, beta) by left-to-right decomposition of alpha.
  Monomial eval(const RootVector& alpha, const RootVector& beta) const;
  /// Closed form prod epsilon(alpha_i, alpha_j)^{m_i n_j} times a binomial sign; agrees with eval.
  Monomial eval_closed(const RootVector& alpha, const RootVector& beta) const;
  /// The parity exponent (bar(a+b) - bar a - bar b | bar c) of the sign correction.
  long correction_exponent(const RootVector& a, const RootVector& b, const RootVector& c) const;

 private:
  RootData roots_;
  std::vector<std::vector<Monomial>> base_;
};

/// <i,j><j,i> = (r/s)^{(alpha_i|alpha_j)} over all 0 <= i, j <= n.
RelationReport check_structure_constants(int n);

/**
 * @brief Functional equations of the cocycle on seeded random triples with
 * coefficients in [-2, 2], and the symmetric products on simple-root pairs.
 */
RelationReport check_cocycle(int n, int samples, std::uint64_t seed);

}  // namespace uqrs
