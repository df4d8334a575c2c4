#include "forcelab/report.hpp"

#include "forcelab/hset_json.hpp"

namespace forcelab {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kHolds: return "HOLDS";
    case CheckStatus::kPreconditionUnmet: return "PRECONDITION_UNMET";
    case CheckStatus::kViolated: return "VIOLATED";
  }
  return "UNKNOWN";
}

void CheckReport::record(CheckStatus instance, const std::optional<HSet>& instance_witness,
                         std::string_view instance_detail) {
  ++instances_checked;
  if (instance == CheckStatus::kPreconditionUnmet) ++instances_unmet;
  if (static_cast<int>(instance) > static_cast<int>(status)) {
    status = instance;
    witness = instance_witness;
    detail = std::string(instance_detail);
  }
}

Json to_json(const CheckReport& report) {
  Json j;
  j["axiom"] = report.axiom;
  j["status"] = std::string(to_string(report.status));
  j["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  j["instances_checked"] = report.instances_checked;
  if (report.instances_unmet > 0) j["instances_unmet"] = report.instances_unmet;
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

}  // namespace forcelab
