#pragma once

#include "forcelab/json.hpp"

#include "forcelab/hset.hpp"

namespace forcelab {

// Nested-array encoding: [] is the empty set, [[]] is {0}. Output is in
// canonical order; input may be in any order and may repeat elements.
Json to_json(const HSet& x);
HSet hset_from_json(const Json& j);

Json to_json(std::span<const HSet> collection);
SetCollection collection_from_json(const Json& j);

}  // namespace forcelab
