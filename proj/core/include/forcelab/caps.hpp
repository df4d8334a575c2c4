#pragma once

#include <cstddef>
#include <string_view>

namespace forcelab {

// Resource limits shared by the exhaustive procedures. Every limit is a hard
// error when exceeded; nothing is silently truncated.
struct Caps {
  std::size_t max_stage = 5;             // largest k accepted by v_stage
  std::size_t stage_elements = 70000;    // |V_k| limit
  std::size_t poset_scan = 14;           // |P| limit for 2^|P| genericity scans
  std::size_t model_elements = 70000;    // |M| limit for build_extension
  std::size_t pow_name_candidates = std::size_t{1} << 20;

  // Overrides from a "key=value,key=value" list, e.g. "stage_elements=100,poset_scan=8".
  // Unknown keys or malformed values throw Error(kInvalidArgument).
  static Caps parse(std::string_view spec);
  static Caps parse(std::string_view spec, Caps base);

  // Defaults overridden by the FORCELAB_CAPS environment variable when set.
  static Caps from_environment();
};

}  // namespace forcelab
