#include "forcelab/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Caps Caps::parse(std::string_view spec) { return parse(spec, Caps{}); }

Caps Caps::parse(std::string_view spec, Caps base) {
  Caps caps = base;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;

    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "cap entry without '=': " + std::string(item));
    }
    auto key = trim(item.substr(0, eq));
    auto text = trim(item.substr(eq + 1));
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad cap value: " + std::string(item));
    }

    if (key == "max_stage") caps.max_stage = value;
    else if (key == "stage_elements") caps.stage_elements = value;
    else if (key == "poset_scan") caps.poset_scan = value;
    else if (key == "model_elements") caps.model_elements = value;
    else if (key == "pow_name_candidates") caps.pow_name_candidates = value;
    else throw Error(ErrorCode::kInvalidArgument, "unknown cap: " + std::string(key));
  }
  return caps;
}

Caps Caps::from_environment() {
  const char* env = std::getenv("FORCELAB_CAPS");
  if (env == nullptr) return Caps{};
  return parse(env);
}

}  // namespace forcelab
