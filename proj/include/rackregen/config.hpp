#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rackregen/rational.hpp"

namespace rackregen {

struct RackSpec {
  int nodes = 0;
  // Same-rack helpers a newcomer in this rack downloads from.
  int cheap_degree = 0;

  bool operator==(const RackSpec&) const = default;
};

// Validated cluster description. Racks are kept sorted ascending by
// cheap_degree (stable, so equal racks keep their input order).
struct SystemConfig {
  Rational file_size{1};
  int k = 0;
  int d = 0;
  Rational tau{1};
  Rational cheap_cost{0};
  Rational expensive_cost{0};
  std::vector<RackSpec> racks;
  // d - cheap_degree, per rack, in rack order.
  std::vector<int> expensive_degrees;

  int rack_count() const { return static_cast<int>(racks.size()); }
  int total_nodes() const;
  int cheap_degree(int rack) const { return racks.at(rack).cheap_degree; }
  int expensive_degree(int rack) const { return expensive_degrees.at(rack); }

  // Builds, normalizes and validates. Throws InvalidConfig naming the
  // violated invariant.
  static SystemConfig create(Rational file_size, int k, int d, Rational tau,
                             Rational cheap_cost, Rational expensive_cost,
                             std::vector<RackSpec> racks);
};

SystemConfig config_from_json(const nlohmann::json& doc);
SystemConfig parse_config(std::string_view text);
SystemConfig load_config(const std::string& path);
nlohmann::json config_to_json(const SystemConfig& cfg);

// Same config with a different tau (used by sweeps).
SystemConfig with_tau(const SystemConfig& cfg, const Rational& tau);

}  // namespace rackregen
