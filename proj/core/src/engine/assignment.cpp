#include "json.hpp"
#include "qseries/engine.hpp"
#include "qseries/error.hpp"

namespace qseries::engine {

namespace {

BlockInstance parse_instance(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("block") || !j["block"].is_string()) {
    throw Error(Errc::invalid_config, "each block entry needs a \"block\" name");
  }
  BlockInstance inst{find_block(j["block"].get<std::string>()), {}};
  if (j.contains("dims")) {
    if (!j["dims"].is_object()) throw Error(Errc::invalid_config, "\"dims\" must be an object");
    for (const auto& [name, value] : j["dims"].items()) {
      if (!value.is_number_integer()) throw Error(Errc::invalid_config, "dimension '" + name + "' must be an integer");
      inst.dims[name] = value.get<int>();
    }
  }
  for (const auto& name : inst.block.dim_names) {
    if (!inst.dims.count(name)) inst.dims[name] = 1;
  }
  for (const auto& [name, value] : inst.dims) {
    bool known = false;
    for (const auto& n : inst.block.dim_names) known = known || n == name;
    if (!known) throw Error(Errc::invalid_config, "block '" + inst.block.name + "' has no dimension '" + name + "'");
    if (value < 1 || value > kMaxDimension) {
      throw Error(Errc::invalid_config, "dimension '" + name + "' must lie in 1.." + std::to_string(kMaxDimension));
    }
  }
  return inst;
}

nlohmann::ordered_json instance_json(const BlockInstance& inst) {
  nlohmann::ordered_json j;
  j["block"] = inst.block.name;
  j["dims"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : inst.dims) j["dims"][name] = value;
  return j;
}

}  // namespace

BlockAssignment parse_assignment(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_config, std::string("block assignment is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array() || !doc.contains("base")) {
    throw Error(Errc::invalid_config, "block assignment needs a \"blocks\" array and a \"base\" entry");
  }
  BlockAssignment a;
  for (const auto& b : doc["blocks"]) a.blocks.push_back(parse_instance(b));
  if (a.blocks.empty()) throw Error(Errc::invalid_config, "block assignment needs at least one block");
  a.base = parse_instance(doc["base"]);
  return a;
}

std::string assignment_to_json(const BlockAssignment& assignment) {
  nlohmann::ordered_json doc;
  doc["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : assignment.blocks) doc["blocks"].push_back(instance_json(b));
  doc["base"] = instance_json(assignment.base);
  return doc.dump();
}

}  // namespace qseries::engine
