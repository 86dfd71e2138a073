#include "rackregen/config.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "rackregen/errors.hpp"

namespace rackregen {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* field) {
  auto it = doc.find(field);
  if (it == doc.end()) throw SchemaError(std::string("missing field '") + field + "'");
  return *it;
}

int require_int(const json& doc, const char* field) {
  const json& v = require(doc, field);
  if (!v.is_number_integer()) {
    throw SchemaError(std::string("field '") + field + "' must be an integer");
  }
  auto value = v.get<long long>();
  if (value < 0 || value > 1'000'000) {
    throw SchemaError(std::string("field '") + field + "' out of range");
  }
  return static_cast<int>(value);
}

Rational require_rational(const json& doc, const char* field) {
  const json& v = require(doc, field);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) {
    throw SchemaError(std::string("field '") + field +
                      "' must be a rational string \"p/q\" or an integer");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("field '") + field + "': " + e.what());
  }
}

void reject_unknown(const json& doc, const std::set<std::string>& known, const char* where) {
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) {
      throw SchemaError(std::string("unknown field '") + key + "' in " + where);
    }
  }
}

void validate(const SystemConfig& cfg) {
  if (cfg.racks.empty()) throw InvalidConfig("at least one rack is required");
  for (size_t j = 0; j < cfg.racks.size(); ++j) {
    const RackSpec& rack = cfg.racks[j];
    if (rack.nodes < 1) {
      throw InvalidConfig("rack " + std::to_string(j + 1) + " has no nodes");
    }
    if (rack.cheap_degree < 0) throw InvalidConfig("cheap_degree must be non-negative");
    if (rack.cheap_degree > rack.nodes - 1) {
      throw InvalidConfig("cheap_degree " + std::to_string(rack.cheap_degree) +
                          " exceeds nodes-1 = " + std::to_string(rack.nodes - 1));
    }
  }
  if (cfg.file_size <= 0) throw InvalidConfig("file_size must be positive");
  if (cfg.tau < 1) throw InvalidConfig("tau < 1");
  if (cfg.cheap_cost < 0) throw InvalidConfig("cheap_cost must be non-negative");
  if (cfg.expensive_cost < cfg.cheap_cost) throw InvalidConfig("expensive_cost < cheap_cost");
  const int n = cfg.total_nodes();
  if (cfg.k < 1) throw InvalidConfig("k must be positive");
  if (cfg.d < 1) throw InvalidConfig("d must be positive");
  if (cfg.k > n) {
    throw InvalidConfig("k = " + std::to_string(cfg.k) + " exceeds total nodes " +
                        std::to_string(n));
  }
  if (cfg.d > n - 1) {
    throw InvalidConfig("d = " + std::to_string(cfg.d) + " exceeds total nodes-1 = " +
                        std::to_string(n - 1));
  }
  if (cfg.k > cfg.d) throw InvalidConfig("k > d unsupported");
  for (int j = 0; j < cfg.rack_count(); ++j) {
    const int de = cfg.expensive_degrees[j];
    const int others = n - cfg.racks[j].nodes;
    if (cfg.rack_count() == 1 && de != 0) {
      throw InvalidConfig("single rack requires cheap_degree = d");
    }
    if (cfg.rack_count() >= 2 && de <= 0) {
      throw InvalidConfig("expensive degree d - cheap_degree of rack " + std::to_string(j + 1) +
                          " must be positive");
    }
    if (de > others) {
      throw InvalidConfig("expensive degree " + std::to_string(de) + " of rack " +
                          std::to_string(j + 1) + " exceeds nodes in other racks = " +
                          std::to_string(others));
    }
  }
}

}  // namespace

int SystemConfig::total_nodes() const {
  return std::accumulate(racks.begin(), racks.end(), 0,
                         [](int acc, const RackSpec& r) { return acc + r.nodes; });
}

SystemConfig SystemConfig::create(Rational file_size, int k, int d, Rational tau,
                                  Rational cheap_cost, Rational expensive_cost,
                                  std::vector<RackSpec> racks) {
  SystemConfig cfg;
  cfg.file_size = std::move(file_size);
  cfg.k = k;
  cfg.d = d;
  cfg.tau = std::move(tau);
  cfg.cheap_cost = std::move(cheap_cost);
  cfg.expensive_cost = std::move(expensive_cost);
  std::stable_sort(racks.begin(), racks.end(), [](const RackSpec& a, const RackSpec& b) {
    return a.cheap_degree < b.cheap_degree;
  });
  cfg.racks = std::move(racks);
  cfg.expensive_degrees.clear();
  for (const auto& rack : cfg.racks) cfg.expensive_degrees.push_back(d - rack.cheap_degree);
  validate(cfg);
  return cfg;
}

SystemConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("config must be a JSON object");
  reject_unknown(doc,
                 {"file_size", "k", "d", "tau", "cheap_cost", "expensive_cost", "racks"},
                 "config");
  const json& racks_doc = require(doc, "racks");
  if (!racks_doc.is_array()) throw SchemaError("field 'racks' must be an array");
  std::vector<RackSpec> racks;
  for (const json& r : racks_doc) {
    if (!r.is_object()) throw SchemaError("each rack must be an object");
    reject_unknown(r, {"nodes", "cheap_degree"}, "rack");
    racks.push_back({require_int(r, "nodes"), require_int(r, "cheap_degree")});
  }
  return SystemConfig::create(require_rational(doc, "file_size"), require_int(doc, "k"),
                              require_int(doc, "d"), require_rational(doc, "tau"),
                              require_rational(doc, "cheap_cost"),
                              require_rational(doc, "expensive_cost"), std::move(racks));
}

SystemConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(doc);
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

nlohmann::json config_to_json(const SystemConfig& cfg) {
  json racks = json::array();
  for (const auto& r : cfg.racks) {
    racks.push_back({{"nodes", r.nodes}, {"cheap_degree", r.cheap_degree}});
  }
  return {{"file_size", to_string(cfg.file_size)},
          {"k", cfg.k},
          {"d", cfg.d},
          {"tau", to_string(cfg.tau)},
          {"cheap_cost", to_string(cfg.cheap_cost)},
          {"expensive_cost", to_string(cfg.expensive_cost)},
          {"racks", racks}};
}

SystemConfig with_tau(const SystemConfig& cfg, const Rational& tau) {
  return SystemConfig::create(cfg.file_size, cfg.k, cfg.d, tau, cfg.cheap_cost,
                              cfg.expensive_cost, cfg.racks);
}

}  // namespace rackregen
