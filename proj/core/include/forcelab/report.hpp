#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "forcelab/json.hpp"

#include "forcelab/hset.hpp"

namespace forcelab {

enum class CheckStatus { kHolds, kPreconditionUnmet, kViolated };

std::string_view to_string(CheckStatus status);

// Outcome of one verification. A VIOLATED report carries the offending
// instance as its witness; PRECONDITION_UNMET marks instances where a closure
// property of the ground model that the argument needs does not hold.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string name) : axiom(std::move(name)) {}

  std::string axiom;
  CheckStatus status = CheckStatus::kHolds;
  std::optional<HSet> witness;
  std::size_t instances_checked = 0;
  std::size_t instances_unmet = 0;
  std::string detail;

  bool holds() const { return status == CheckStatus::kHolds; }
  bool violated() const { return status == CheckStatus::kViolated; }

  // Folds one instance outcome in: VIOLATED dominates PRECONDITION_UNMET,
  // which dominates HOLDS. The first witness of the dominating status is kept.
  void record(CheckStatus instance, const std::optional<HSet>& instance_witness = std::nullopt,
              std::string_view instance_detail = {});
};

// {"axiom","status","witness","instances_checked"} plus "instances_unmet" and
// "detail" when non-trivial.
Json to_json(const CheckReport& report);

}  // namespace forcelab
