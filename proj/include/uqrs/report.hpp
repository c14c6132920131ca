/**
 * @file report.hpp
 * @brief Outcome records shared by every verification suite.
 */
#pragma once

#include <string>
#include <vector>

namespace uqrs {

/// One checked instance of an identity.
struct InstanceResult {
  std::string name;
  bool passed = false;
  /// Failure witness, or a short note for passing instances.
  std::string detail;
  /// Informational instances record an outcome without affecting the suite verdict.
  bool informational = false;
};

/// Outcome of one verification suite.
struct RelationReport {
  std::string suite;
  /// Human-readable parameter window (rank, modes, degrees, scalar mode).
  std::string window;
  std::vector<InstanceResult> instances;
  /// Free-form remarks such as resolved conventions or reconstructed statements.
  std::vector<std::string> notes;

  void add(std::string name, bool ok, std::string detail = {}, bool informational = false) {
    instances.push_back(InstanceResult{std::move(name), ok, std::move(detail), informational});
  }

  std::size_t checked() const {
    std::size_t n = 0;
    for (const auto& r : instances)
      if (!r.informational) ++n;
    return n;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : instances)
      if (!r.informational && !r.passed) ++n;
    return n;
  }

  bool passed() const { return failures() == 0; }

  /// Appends all instances and notes of another report, prefixing instance names.
  void merge(const RelationReport& other, const std::string& prefix = {}) {
    for (const auto& r : other.instances) {
      InstanceResult copy = r;
      copy.name = prefix + copy.name;
      instances.push_back(std::move(copy));
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace uqrs
