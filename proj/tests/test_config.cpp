#include <gtest/gtest.h>

#include "rackregen/config.hpp"
#include "rackregen/errors.hpp"
#include "support.hpp"

namespace rackregen {
namespace {

using testing::config_path;
using testing::R;

TEST(Config, ParsesAndDerivesExpensiveDegrees) {
  auto cfg = parse_config(R"({"file_size": "1", "k": 10, "d": 11, "tau": "2",
      "cheap_cost": 1, "expensive_cost": "10",
      "racks": [{"nodes": 6, "cheap_degree": 5}, {"nodes": 6, "cheap_degree": 5}]})");
  EXPECT_EQ(cfg.rack_count(), 2);
  EXPECT_EQ(cfg.total_nodes(), 12);
  EXPECT_EQ(cfg.expensive_degree(0), 6);
  EXPECT_EQ(cfg.tau, 2);
  EXPECT_EQ(cfg.expensive_cost, 10);
}

TEST(Config, SortsRacksByCheapDegreeStably) {
  auto cfg = SystemConfig::create(1, 3, 6, 2, 1, 1, {{5, 4}, {2, 1}});
  ASSERT_EQ(cfg.rack_count(), 2);
  EXPECT_EQ(cfg.racks[0], (RackSpec{2, 1}));
  EXPECT_EQ(cfg.racks[1], (RackSpec{5, 4}));
  EXPECT_EQ(cfg.expensive_degrees, (std::vector<int>{5, 2}));

  auto tied = SystemConfig::create(1, 4, 5, 1, 1, 1, {{4, 2}, {3, 2}});
  EXPECT_EQ(tied.racks[0].nodes, 4);
  EXPECT_EQ(tied.racks[1].nodes, 3);
}

TEST(Config, SchemaErrors) {
  EXPECT_THROW(parse_config("not json"), SchemaError);
  EXPECT_THROW(parse_config("[]"), SchemaError);
  EXPECT_THROW(parse_config(R"({"k": 1})"), SchemaError);
  EXPECT_THROW(parse_config(R"({"file_size": "1", "k": 4, "d": 4, "tau": "2", "cheap_cost": 1,
      "expensive_cost": 1, "racks": [{"nodes": 3, "cheap_degree": 1}], "colour": 1})"),
               SchemaError);
  EXPECT_THROW(parse_config(R"({"file_size": "1", "k": "4", "d": 4, "tau": "2", "cheap_cost": 1,
      "expensive_cost": 1, "racks": []})"),
               SchemaError);
  EXPECT_THROW(parse_config(R"({"file_size": 0.5, "k": 4, "d": 4, "tau": "2", "cheap_cost": 1,
      "expensive_cost": 1, "racks": []})"),
               SchemaError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), SchemaError);
}

TEST(Config, InvariantViolationsNameTheInvariant) {
  auto message = [](auto&& fn) {
    try {
      fn();
    } catch (const InvalidConfig& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message([] { SystemConfig::create(1, 3, 4, 2, 1, 1, {{3, 3}, {3, 1}}); })
                .find("exceeds nodes-1"),
            std::string::npos);
  EXPECT_NE(message([] { SystemConfig::create(1, 5, 4, 2, 1, 1, {{3, 1}, {3, 2}}); })
                .find("k > d"),
            std::string::npos);
  EXPECT_NE(message([] { SystemConfig::create(1, 3, 4, R("1/2"), 1, 1, {{3, 1}, {3, 2}}); })
                .find("tau < 1"),
            std::string::npos);
  EXPECT_THROW(SystemConfig::create(0, 3, 4, 2, 1, 1, {{3, 1}, {3, 2}}), InvalidConfig);
  EXPECT_THROW(SystemConfig::create(1, 3, 4, 2, 1, 1, {}), InvalidConfig);
  // d - d_c of rack 1 would need 4 helpers from a rack of 2.
  EXPECT_THROW(SystemConfig::create(1, 3, 5, 2, 1, 1, {{4, 1}, {2, 1}}), InvalidConfig);
  // A single rack must take every helper from inside the rack.
  EXPECT_THROW(SystemConfig::create(1, 3, 4, 2, 1, 1, {{6, 3}}), InvalidConfig);
  EXPECT_NO_THROW(SystemConfig::create(1, 3, 4, 2, 1, 1, {{6, 4}}));
}

TEST(Config, RoundTripsThroughJson) {
  auto cfg = load_config(config_path("three_rack.json"));
  auto again = config_from_json(config_to_json(cfg));
  EXPECT_EQ(again.racks, cfg.racks);
  EXPECT_EQ(again.tau, R("11/5"));
  EXPECT_EQ(again.k, 7);
  EXPECT_EQ(again.d, 8);
}

TEST(Config, WithTauKeepsEverythingElse) {
  auto cfg = load_config(config_path("fig8.json"));
  auto swept = with_tau(cfg, R("6/5"));
  EXPECT_EQ(swept.tau, R("6/5"));
  EXPECT_EQ(swept.racks, cfg.racks);
  EXPECT_THROW(with_tau(cfg, R("9/10")), InvalidConfig);
}

}  // namespace
}  // namespace rackregen
