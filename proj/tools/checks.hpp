#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hybrid/model.hpp"

namespace hybrid::cli {

struct CheckResult {
  std::string name;
  bool passed;
  bool skipped;
  std::string detail;
};

/// Invariant suite behind `hybridsd check`. `raw_degrees` is the input
/// before linear reduction (used for the idempotence check).
std::vector<CheckResult> run_checks(const CompleteIntersectionModel& model,
                                    std::span<const std::int64_t> raw_degrees,
                                    std::optional<std::int64_t> horizon);

}  // namespace hybrid::cli
