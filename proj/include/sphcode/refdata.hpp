#pragma once

#include <string>
#include <vector>

namespace sphcode {

enum class RefStatus { proved, conjectured, numerical_bound };

std::string to_string(RefStatus s);

/// Cited constant used for reporting and cross-checks. Conjectured entries
/// are never used as ground truth in soundness tests.
struct ReferenceEntry {
  std::string key;
  double value = 0.0;
  RefStatus status = RefStatus::proved;
  std::string citation;
};

const std::vector<ReferenceEntry>& reference_table();

/// Throws std::out_of_range for unknown keys.
const ReferenceEntry& ref_lookup(const std::string& key);

}  // namespace sphcode
