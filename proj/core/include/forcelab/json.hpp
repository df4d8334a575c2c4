#pragma once

#include <nlohmann/json.hpp>

namespace forcelab {

// Insertion-ordered JSON so emitted reports keep a fixed key order.
using Json = nlohmann::ordered_json;

}  // namespace forcelab
