#include "ba/config.hpp"

#include <fstream>

#include "ba/error.hpp"

namespace ba {

namespace {

template <class T>
void take(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() || v.template get<uint64_t>() == 0)
    raise(ErrorKind::Parse, std::string("config key ") + key +
                                " must be a positive integer");
  out = static_cast<T>(v.template get<uint64_t>());
}

}  // namespace

Limits config_from_json(const nlohmann::json& j, const Limits& base) {
  if (!j.is_object()) raise(ErrorKind::Parse, "config must be a JSON object");
  static const char* known[] = {"termDepthCap", "magnitudeCap", "truthBudget",
                                "towerCap",     "exploreDepth", "oracleWidth",
                                "seed"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) raise(ErrorKind::Parse, "unknown config key " + key);
  }
  Limits l = base;
  take(j, "termDepthCap", l.term_depth);
  take(j, "magnitudeCap", l.magnitude_bits);
  take(j, "truthBudget", l.truth_budget);
  take(j, "towerCap", l.tower_bits);
  take(j, "exploreDepth", l.explore_depth);
  take(j, "oracleWidth", l.oracle_width);
  if (j.contains("seed")) {
    const auto& v = j.at("seed");
    if (!v.is_number_unsigned())
      raise(ErrorKind::Parse, "config key seed must be a nonnegative integer");
    l.seed = v.get<uint64_t>();
  }
  return l;
}

nlohmann::json config_to_json(const Limits& l) {
  nlohmann::json j;
  j["termDepthCap"] = l.term_depth;
  j["magnitudeCap"] = l.magnitude_bits;
  j["truthBudget"] = l.truth_budget;
  j["towerCap"] = l.tower_bits;
  j["exploreDepth"] = l.explore_depth;
  j["oracleWidth"] = l.oracle_width;
  j["seed"] = l.seed;
  return j;
}

Limits load_config(const std::string& path, const Limits& base) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::Parse, "cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Parse, "config file " + path + ": " + e.what());
  }
  return config_from_json(j, base);
}

}  // namespace ba
