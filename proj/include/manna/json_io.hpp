#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "manna/core.hpp"
#include "manna/fairness.hpp"

namespace manna {

// Instance plus the optional display names carried by instance files. The
// solver core only ever sees dense indices.
struct NamedInstance {
  Instance inst;
  std::vector<std::string> agent_names;  // empty -> indices are the names
  std::vector<std::string> item_names;

  std::string agent_name(int i) const {
    return agent_names.empty() ? std::to_string(i) : agent_names[i];
  }
  std::string item_name(int j) const {
    return item_names.empty() ? std::to_string(j) : item_names[j];
  }
  int agent_index(const std::string& name) const;
  int item_index(const std::string& name) const;
};

// {"agents": [...]?, "items": [...]?, "values": [[int or "p/q", ...], ...]}
NamedInstance parse_instance_json(const nlohmann::json& j);
NamedInstance load_instance_file(const std::string& path);
nlohmann::json instance_to_json(const NamedInstance& named);

// {"allocation": {"<agent>": ["<item>", ...], ...}} with names or indices;
// also accepts the bare map. Agents may be omitted (empty bundle).
Allocation parse_allocation_json(const nlohmann::json& j, const NamedInstance& named);
Allocation load_allocation_file(const std::string& path, const NamedInstance& named);
nlohmann::json allocation_to_json(const Allocation& alloc, const NamedInstance& named);

nlohmann::json witnesses_to_json(const std::vector<Witness>& witnesses,
                                 const NamedInstance& named);
nlohmann::json class_to_json(const InstanceClass& cls);

nlohmann::json rational_to_json(const Rational& r);  // number when integral, else "p/q"

}  // namespace manna
