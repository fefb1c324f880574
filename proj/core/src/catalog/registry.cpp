#include <algorithm>

#include "catalog/detail.hpp"

namespace qseries {

int BaseProfile::block_count(const Dims& dims) const {
  if (block_dim.empty()) return fixed_blocks;
  auto it = dims.find(block_dim);
  if (it == dims.end()) throw Error(Errc::invalid_parameters, "missing dimension '" + block_dim + "'");
  return it->second;
}

void Identity::check_dims(const Dims& dims) const {
  for (const auto& name : dim_names) {
    auto it = dims.find(name);
    if (it == dims.end()) throw Error(Errc::invalid_parameters, id + ": missing dimension '" + name + "'");
    if (it->second < 1 || it->second > kMaxDimension) {
      throw Error(Errc::invalid_parameters, id + ": dimension '" + name + "' must lie in 1.." +
                                                std::to_string(kMaxDimension));
    }
  }
  for (const auto& [name, value] : dims) {
    (void)value;
    if (std::find(dim_names.begin(), dim_names.end(), name) == dim_names.end()) {
      throw Error(Errc::invalid_parameters, id + ": unknown dimension '" + name + "'");
    }
  }
}

bool Identity::in_domain(const ParameterSet& params, const BaseSystem& bases, double bound) const {
  try {
    check_dims(params.dims());
    validate_schema(schema, params);
  } catch (const Error&) {
    return false;
  }
  if (static_cast<int>(bases.block_count()) != base.block_count(params.dims())) return false;
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const Constraint& c) { return c.modulus(params, bases) < bound; });
}

const std::vector<Identity>& register_all() {
  static const std::vector<Identity> all = [] {
    std::vector<Identity> out;
    catalog_detail::register_classical(out);
    catalog_detail::register_an_theorems(out);
    catalog_detail::register_ramanujan(out);
    catalog_detail::register_euler(out);
    catalog_detail::register_lauricella(out);
    return out;
  }();
  return all;
}

const Identity& lookup(const std::string& id) {
  const auto& all = register_all();
  auto it = std::find_if(all.begin(), all.end(), [&](const Identity& i) { return i.id == id; });
  if (it == all.end()) throw Error(Errc::unknown_identity, "no identity named '" + id + "'");
  return *it;
}

std::string dims_to_string(const Dims& dims) {
  std::string out;
  for (const auto& [name, value] : dims) {
    if (!out.empty()) out += ',';
    out += name + '=' + std::to_string(value);
  }
  return out;
}

}  // namespace qseries
