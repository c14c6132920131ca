/**
 * @file suites.hpp
 * @brief Named verification suites: each builds operator identities (or series
 * and lattice checks), runs them on generated test states and returns a
 * RelationReport.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqrs/report.hpp"
#include "uqrs/vertex.hpp"

namespace uqrs {

struct SuiteConfig {
  int rank = 2;
  bool numeric = false;
  Rational p0 = 2, q0 = 3;
  /// Overrides of the per-suite default windows.
  std::optional<Rational> max_degree;
  std::optional<int> max_shifts;
  std::optional<std::pair<int, int>> mode_window;
  std::uint64_t seed = 20240917;
  VertexConventions conventions;
  bool parallel = true;
};

/// Default window of a suite.
struct SuiteWindow {
  Rational max_degree;
  int max_shifts = 0;
  int mode_lo = 0, mode_hi = 0;
};

/// All suite ids in their canonical run order.
const std::vector<std::string>& suite_ids();

/// True for suites that operate on the Fock space (and so depend on the scalar mode).
bool suite_uses_fock_space(const std::string& id);

/// The default window of a suite, with the overrides of cfg applied.
SuiteWindow resolve_window(const std::string& id, const SuiteConfig& cfg);

/**
 * @brief Runs one suite.
 * @throws std::invalid_argument for an unknown suite id.
 */
RelationReport run_suite(const std::string& id, const SuiteConfig& cfg);

/// One-line summary of the vertex convention switches in force.
std::string describe_conventions(const SuiteConfig& cfg);

}  // namespace uqrs
