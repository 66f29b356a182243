#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclic {

/// Outcome of one randomized invariant group.
struct PropertyGroup {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  /// Description of the first failing case, if any.
  std::string first_failure;
  bool passed() const noexcept { return failures == 0; }
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyGroup> groups;

  bool passed() const noexcept;
  std::int64_t total_cases() const noexcept;
  /// Deterministic summary: identical seed and suite give identical bytes.
  std::string to_json() const;
};

enum class Suite { fast, all };

/// "fast": special-function shape and derivative checks.
/// "all": fast plus sum identities, block diagnostics, the Jensen floor,
/// gradients, tangent solutions and witness certification.
VerifyReport run_verify(Suite suite, std::uint64_t seed);

}  // namespace cyclic
