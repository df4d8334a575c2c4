#include "forcelab/ground.hpp"

#include <string>

#include "forcelab/error.hpp"
#include "forcelab/hset_json.hpp"
#include "forcelab/names.hpp"

namespace forcelab {

Model transitive_hull(std::span<const HSet> seeds) {
  SetCollection all(seeds.begin(), seeds.end());
  for (const auto& s : seeds) {
    const auto below = eclose(s).elements();
    all.insert(all.end(), below.begin(), below.end());
  }
  return Model(std::move(all));
}

Model forcing_ground(std::size_t k, const ForcingNotion& notion, std::span<const HSet> extra, const Caps& caps) {
  SetCollection seeds = v_stage(k, caps);
  seeds.push_back(notion.carrier());
  seeds.push_back(notion.order_hset());
  seeds.push_back(g_dot(notion));
  for (const auto& p : notion.elements()) seeds.push_back(check_name(p, notion.top_element()));
  seeds.insert(seeds.end(), extra.begin(), extra.end());
  return transitive_hull(seeds);
}

Json model_to_json(const Model& model) {
  Json j;
  j["universe"] = to_json(model.universe());
  return j;
}

Model model_from_json(const Json& j, const Caps& caps) {
  if (!j.is_object() || !j.contains("universe")) {
    throw Error(ErrorCode::kInvalidArgument, "model JSON needs a \"universe\" array");
  }
  SetCollection universe = collection_from_json(j.at("universe"));
  if (universe.size() > caps.model_elements) {
    throw Error(ErrorCode::kModelTooLarge, std::to_string(universe.size()) + " sets exceed cap " +
                                               std::to_string(caps.model_elements));
  }
  Model model(std::move(universe));
  if (!model.is_transitive()) throw Error(ErrorCode::kInvalidArgument, "model is not transitive");
  return model;
}

}  // namespace forcelab
