#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <optional>
#include <vector>

#include "rackregen/errors.hpp"

#include "rackregen/config.hpp"
#include "rackregen/rational.hpp"

namespace rackregen::testing {

inline Rational R(const char* text) { return parse_rational(text); }

template <class... Texts>
std::vector<Rational> Rs(const Texts&... texts) {
  return {parse_rational(texts)...};
}

inline SystemConfig two_rack(int k, int d, const Rational& tau, RackSpec a, RackSpec b,
                             const Rational& M = 1) {
  return SystemConfig::create(M, k, d, tau, 1, 10, {a, b});
}

inline std::string config_path(const std::string& name) {
  return std::string(RACKREGEN_CONFIG_DIR) + "/" + name;
}

// Draws until a config passes validation. Raw modulo keeps the sequence
// identical across standard libraries.
inline SystemConfig random_config(std::mt19937_64& rng, int racks, int max_rack_nodes,
                                  int max_total_nodes, int max_k,
                                  const std::vector<Rational>& taus) {
  while (true) {
    std::vector<RackSpec> specs;
    int total = 0;
    for (int j = 0; j < racks; ++j) {
      const int nodes = 1 + static_cast<int>(rng() % max_rack_nodes);
      specs.push_back({nodes, static_cast<int>(rng() % nodes)});
      total += nodes;
    }
    if (total > max_total_nodes || total < 2) continue;
    const int d = 1 + static_cast<int>(rng() % (total - 1));
    const int k = 1 + static_cast<int>(rng() % std::min(max_k, d));
    const Rational tau = taus[rng() % taus.size()];
    try {
      return SystemConfig::create(1, k, d, tau, 1, 10, specs);
    } catch (const InvalidConfig&) {
    }
  }
}

// Min-cut bound computed without the flow graph: every order in which the
// first k failures can hit the racks, each newcomer losing one cheap helper
// per earlier newcomer in its own rack and one expensive helper per earlier
// newcomer elsewhere.
inline Rational ordered_income_bound(const SystemConfig& cfg, const Rational& alpha,
                                     const Rational& beta) {
  std::optional<Rational> best;
  std::vector<int> used(cfg.rack_count(), 0);
  std::function<void(const Rational&, int)> walk = [&](const Rational& acc, int t) {
    if (t == cfg.k) {
      if (!best || acc < *best) best = acc;
      return;
    }
    for (int j = 0; j < cfg.rack_count(); ++j) {
      if (used[j] == cfg.racks[j].nodes) continue;
      const int same = used[j];
      const int other = t - used[j];
      const Rational income = std::max(0, cfg.cheap_degree(j) - same) * cfg.tau +
                              std::max(0, cfg.expensive_degree(j) - other);
      ++used[j];
      walk(acc + rmin(income * beta, alpha), t + 1);
      --used[j];
    }
  };
  walk(0, 0);
  return *best;
}

}  // namespace rackregen::testing
