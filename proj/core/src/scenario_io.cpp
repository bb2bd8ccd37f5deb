#include "ecosim/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ecosim {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& scope) {
  for (const auto& [key, value] : object.items()) {
    bool found = false;
    for (const char* k : known) {
      if (key == k) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw ConfigError("unknown scenario key: " +
                        (scope.empty() ? key : scope + "." + key));
    }
  }
}

template <typename T>
void read_number(const json& object, const char* key, T& out,
                 const std::string& scope) {
  if (!object.contains(key)) return;
  const json& v = object.at(key);
  if (!v.is_number()) {
    throw ConfigError("scenario key is not a number: " +
                      (scope.empty() ? std::string(key) : scope + "." + key));
  }
  out = v.get<T>();
}

std::string read_string(const json& object, const char* key) {
  const json& v = object.at(key);
  if (!v.is_string())
    throw ConfigError(std::string("scenario key is not a string: ") + key);
  return v.get<std::string>();
}

}  // namespace

ScenarioConfig parse_scenario_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("scenario file must be a JSON object");

  reject_unknown_keys(doc,
                      {"labor", "price_regime", "layout", "contact_radius",
                       "population", "steps", "seed", "world", "patches",
                       "rates", "max_contacts"},
                      "");

  ScenarioConfig config;
  if (doc.contains("labor")) config.labor = parse_labor(read_string(doc, "labor"));
  if (doc.contains("price_regime"))
    config.price_regime = parse_price_regime(read_string(doc, "price_regime"));
  if (doc.contains("layout")) config.layout = parse_layout(read_string(doc, "layout"));
  read_number(doc, "contact_radius", config.contact_radius, "");
  read_number(doc, "population", config.population, "");
  read_number(doc, "steps", config.steps, "");
  read_number(doc, "seed", config.seed, "");
  read_number(doc, "max_contacts", config.model.max_contacts, "");

  if (doc.contains("world")) {
    const json& world = doc.at("world");
    if (!world.is_object()) throw ConfigError("scenario key 'world' must be an object");
    reject_unknown_keys(world, {"width", "height"}, "world");
    read_number(world, "width", config.world_width, "world");
    read_number(world, "height", config.world_height, "world");
  }
  if (doc.contains("patches")) {
    const json& patches = doc.at("patches");
    if (!patches.is_object())
      throw ConfigError("scenario key 'patches' must be an object");
    reject_unknown_keys(
        patches, {"food_count", "food_size", "mineral_count", "mineral_size"},
        "patches");
    read_number(patches, "food_count", config.patches.food_count, "patches");
    read_number(patches, "food_size", config.patches.food_size, "patches");
    read_number(patches, "mineral_count", config.patches.mineral_count, "patches");
    read_number(patches, "mineral_size", config.patches.mineral_size, "patches");
  }
  if (doc.contains("rates")) {
    const json& rates = doc.at("rates");
    if (!rates.is_object()) throw ConfigError("scenario key 'rates' must be an object");
    reject_unknown_keys(rates,
                        {"collection", "metabolism", "reserve", "initial_money",
                         "initial_price", "endowment"},
                        "rates");
    read_number(rates, "collection", config.model.collection_rate, "rates");
    read_number(rates, "metabolism", config.model.metabolism, "rates");
    read_number(rates, "reserve", config.model.reserve, "rates");
    read_number(rates, "initial_money", config.model.initial_money, "rates");
    read_number(rates, "initial_price", config.model.initial_price, "rates");
    read_number(rates, "endowment", config.model.endowment, "rates");
  }

  validate(config);
  return config;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_json(buffer.str());
}

std::string scenario_to_json(const ScenarioConfig& config) {
  json doc;
  doc["labor"] = std::string(to_string(config.labor));
  doc["price_regime"] = std::string(to_string(config.price_regime));
  doc["layout"] = std::string(to_string(config.layout));
  doc["contact_radius"] = config.contact_radius;
  doc["population"] = config.population;
  doc["steps"] = config.steps;
  doc["seed"] = config.seed;
  doc["world"] = {{"width", config.world_width}, {"height", config.world_height}};
  doc["patches"] = {{"food_count", config.patches.food_count},
                    {"food_size", config.patches.food_size},
                    {"mineral_count", config.patches.mineral_count},
                    {"mineral_size", config.patches.mineral_size}};
  doc["rates"] = {{"collection", config.model.collection_rate},
                  {"metabolism", config.model.metabolism},
                  {"reserve", config.model.reserve},
                  {"initial_money", config.model.initial_money},
                  {"initial_price", config.model.initial_price},
                  {"endowment", config.model.endowment}};
  doc["max_contacts"] = config.model.max_contacts;
  return doc.dump(2) + "\n";
}

void save_scenario_file(const ScenarioConfig& config, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write scenario file: " + path);
  out << scenario_to_json(config);
  if (!out) throw IoError("failed writing scenario file: " + path);
}

}  // namespace ecosim
