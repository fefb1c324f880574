#include "json.hpp"

#include "qseries/catalog.hpp"
#include "qseries/version.hpp"

namespace qseries {

namespace {

const char* kind_name(ParamKind kind) {
  switch (kind) {
    case ParamKind::coefficient: return "coefficient";
    case ParamKind::variable: return "variable";
    case ParamKind::argument: return "argument";
  }
  return "coefficient";
}

}  // namespace

std::string export_catalog_json() {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["tool_version"] = kVersion;
  doc["max_dimension"] = kMaxDimension;
  auto& entries = doc["identities"] = nlohmann::ordered_json::array();
  for (const auto& identity : register_all()) {
    nlohmann::ordered_json e;
    e["id"] = identity.id;
    e["title"] = identity.title;
    e["dimensions"] = identity.dim_names;
    auto& params = e["parameters"] = nlohmann::ordered_json::array();
    for (const auto& spec : identity.schema) {
      nlohmann::ordered_json p;
      p["name"] = spec.name;
      p["kind"] = kind_name(spec.kind);
      if (spec.dim.empty()) {
        p["shape"] = "scalar";
      } else {
        p["shape"] = "vector";
        p["length"] = spec.dim;
      }
      p["sample_modulus"] = {spec.min_modulus, spec.max_modulus};
      params.push_back(std::move(p));
    }
    nlohmann::ordered_json bases;
    bases["q"] = {identity.base.q_min, identity.base.q_max};
    bases["h"] = identity.base.uses_h;
    bases["t"] = identity.base.uses_t;
    if (!identity.base.block_dim.empty()) {
      bases["block_exponents"] = identity.base.block_dim;
    } else if (identity.base.fixed_blocks > 0) {
      bases["block_exponents"] = identity.base.fixed_blocks;
    }
    e["bases"] = std::move(bases);
    auto& constraints = e["constraints"] = nlohmann::ordered_json::array();
    for (const auto& c : identity.constraints) constraints.push_back(c.label);
    entries.push_back(std::move(e));
  }
  return doc.dump(2);
}

}  // namespace qseries
