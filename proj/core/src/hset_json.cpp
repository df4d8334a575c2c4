#include "forcelab/hset_json.hpp"

#include "forcelab/error.hpp"

namespace forcelab {

Json to_json(const HSet& x) {
  auto out = Json::array();
  for (const auto& e : x.elements()) out.push_back(to_json(e));
  return out;
}

HSet hset_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kInvalidArgument, "HSet JSON must be a nested array, got " + j.dump());
  }
  std::vector<HSet> elements;
  elements.reserve(j.size());
  for (const auto& e : j) elements.push_back(hset_from_json(e));
  return HSet::of(std::move(elements));
}

Json to_json(std::span<const HSet> collection) {
  auto out = Json::array();
  for (const auto& x : collection) out.push_back(to_json(x));
  return out;
}

SetCollection collection_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidArgument, "expected an array of sets");
  SetCollection out;
  for (const auto& e : j) out.push_back(hset_from_json(e));
  canonicalize(out);
  return out;
}

}  // namespace forcelab
