#include "manna/json_io.hpp"

#include <fstream>

namespace manna {

namespace {

Rational parse_value(const nlohmann::json& v, int row, int col) {
  auto where = [&]() {
    return "values[" + std::to_string(row) + "][" + std::to_string(col) + "]";
  };
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_float()) {
    fail(Errc::Parse, where() + " is a float; use an integer or a \"p/q\" string");
  }
  fail(Errc::Parse, where() + " must be an integer or a \"p/q\" string");
}

std::vector<std::string> parse_names(const nlohmann::json& j, const char* field,
                                     std::size_t expected) {
  std::vector<std::string> names;
  if (!j.contains(field)) return names;
  const auto& arr = j.at(field);
  if (!arr.is_array()) fail(Errc::Parse, std::string("\"") + field + "\" must be an array");
  for (const auto& e : arr) {
    if (!e.is_string()) fail(Errc::Parse, std::string("\"") + field + "\" entries must be strings");
    names.push_back(e.get<std::string>());
  }
  if (names.size() != expected) {
    fail(Errc::Parse, std::string("\"") + field + "\" has " + std::to_string(names.size()) +
                          " entries, expected " + std::to_string(expected));
  }
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      if (names[a] == names[b]) {
        fail(Errc::Parse, std::string("duplicate ") + field + " name \"" + names[a] + "\"");
      }
    }
  }
  return names;
}

nlohmann::json parse_text(const std::string& text, const std::string& context) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::Parse, context + ": " + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Parse, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

int NamedInstance::agent_index(const std::string& name) const {
  for (int i = 0; i < inst.agents(); ++i) {
    if (agent_name(i) == name) return i;
  }
  if (agent_names.empty()) {
    fail(Errc::Parse, "agent index \"" + name + "\" out of range");
  }
  fail(Errc::Parse, "unknown agent \"" + name + "\"");
}

int NamedInstance::item_index(const std::string& name) const {
  for (int j = 0; j < inst.items(); ++j) {
    if (item_name(j) == name) return j;
  }
  if (item_names.empty()) {
    fail(Errc::Parse, "item index \"" + name + "\" out of range");
  }
  fail(Errc::Parse, "unknown item \"" + name + "\"");
}

NamedInstance parse_instance_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(Errc::Parse, "instance file must be a JSON object");
  if (!j.contains("values")) fail(Errc::Parse, "instance file lacks \"values\"");
  const auto& rows = j.at("values");
  if (!rows.is_array()) fail(Errc::Parse, "\"values\" must be an array of rows");
  if (rows.empty()) fail(Errc::Parse, "\"values\" needs at least one agent row");

  std::vector<std::vector<Rational>> matrix;
  std::size_t width = rows.at(0).is_array() ? rows.at(0).size() : 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array()) {
      fail(Errc::Parse, "values[" + std::to_string(i) + "] must be an array");
    }
    if (row.size() != width) {
      fail(Errc::Parse, "values[" + std::to_string(i) + "] has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(width));
    }
    std::vector<Rational> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      out.push_back(parse_value(row.at(c), int(i), int(c)));
    }
    matrix.push_back(std::move(out));
  }

  NamedInstance named;
  named.inst = Instance::from_rows(matrix);
  named.agent_names = parse_names(j, "agents", rows.size());
  named.item_names = parse_names(j, "items", width);
  return named;
}

NamedInstance load_instance_file(const std::string& path) {
  return parse_instance_json(parse_text(slurp(path), path));
}

nlohmann::json rational_to_json(const Rational& r) {
  if (r.den() == 1) return r.num();
  return r.str();
}

nlohmann::json instance_to_json(const NamedInstance& named) {
  nlohmann::json j;
  if (!named.agent_names.empty()) j["agents"] = named.agent_names;
  if (!named.item_names.empty()) j["items"] = named.item_names;
  auto rows = nlohmann::json::array();
  for (int i = 0; i < named.inst.agents(); ++i) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < named.inst.items(); ++c) {
      row.push_back(rational_to_json(named.inst.value(i, c)));
    }
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  return j;
}

Allocation parse_allocation_json(const nlohmann::json& j, const NamedInstance& named) {
  const nlohmann::json* map = &j;
  if (j.is_object() && j.contains("allocation")) map = &j.at("allocation");
  if (!map->is_object()) fail(Errc::Parse, "allocation must be an object of agent -> item list");

  Allocation alloc(named.inst.agents(), named.inst.items());
  for (auto it = map->begin(); it != map->end(); ++it) {
    int agent = named.agent_index(it.key());
    if (!it.value().is_array()) {
      fail(Errc::Parse, "bundle of agent \"" + it.key() + "\" must be an array");
    }
    for (const auto& entry : it.value()) {
      int item;
      if (entry.is_number_integer()) {
        long long raw = entry.get<long long>();
        if (raw < 0 || raw >= named.inst.items()) {
          fail(Errc::Parse, "item index " + std::to_string(raw) + " out of range");
        }
        item = int(raw);
      } else if (entry.is_string()) {
        item = named.item_index(entry.get<std::string>());
      } else {
        fail(Errc::Parse, "bundle entries must be item names or indices");
      }
      if (alloc.is_allocated(item)) {
        fail(Errc::Parse, "item \"" + named.item_name(item) + "\" assigned twice");
      }
      alloc.assign(item, agent);
    }
  }
  return alloc;
}

Allocation load_allocation_file(const std::string& path, const NamedInstance& named) {
  return parse_allocation_json(parse_text(slurp(path), path), named);
}

nlohmann::json allocation_to_json(const Allocation& alloc, const NamedInstance& named) {
  nlohmann::json j = nlohmann::json::object();
  for (int i = 0; i < alloc.agents(); ++i) {
    auto items = nlohmann::json::array();
    for (int item : alloc.bundle(i)) items.push_back(named.item_name(item));
    j[named.agent_name(i)] = std::move(items);
  }
  return j;
}

nlohmann::json witnesses_to_json(const std::vector<Witness>& witnesses,
                                 const NamedInstance& named) {
  auto arr = nlohmann::json::array();
  for (const Witness& w : witnesses) {
    nlohmann::json entry;
    entry["agent"] = w.agent >= 0 ? named.agent_name(w.agent) : "-";
    entry["condition"] = w.condition;
    auto agents = nlohmann::json::array();
    for (int a : w.agents) agents.push_back(named.agent_name(a));
    entry["agents"] = std::move(agents);
    auto items = nlohmann::json::array();
    for (int it : w.items) items.push_back(named.item_name(it));
    entry["items"] = std::move(items);
    arr.push_back(std::move(entry));
  }
  return arr;
}

nlohmann::json class_to_json(const InstanceClass& cls) {
  nlohmann::json j;
  j["goods_only"] = cls.goods_only;
  j["bads_only"] = cls.bads_only;
  j["separable"] = cls.separable;
  j["restricted_mixed_goods"] = cls.restricted_mixed_goods;
  j["binary_mixed_goods"] = cls.binary_mixed_goods;
  j["ido_bads"] = cls.ido_bads;
  j["identical_bads"] = cls.identical_bads;
  j["ido_all"] = cls.ido_all;
  j["identical_all"] = cls.identical_all;
  return j;
}

}  // namespace manna
