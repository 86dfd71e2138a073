#include <algorithm>
#include <functional>
#include <map>

#include "flow_internal.hpp"
#include "rackregen/errors.hpp"
#include "rackregen/flowgraph.hpp"

namespace rackregen {

namespace {

using Visitor = std::function<void(const Scenario&)>;

void check_guards(const SystemConfig& cfg, OracleMode mode) {
  if (cfg.k > cfg.total_nodes()) {
    throw EnumerationTooLarge("k exceeds the number of storage nodes");
  }
  if (mode == OracleMode::exhaustive &&
      (cfg.total_nodes() > kExhaustiveNodeLimit || cfg.k > kExhaustiveKLimit)) {
    throw EnumerationTooLarge("exhaustive mode needs n <= " + std::to_string(kExhaustiveNodeLimit) +
                              " and k <= " + std::to_string(kExhaustiveKLimit) + ", got n = " +
                              std::to_string(cfg.total_nodes()) + ", k = " + std::to_string(cfg.k));
  }
}

// Number of length-k rack sequences with at most n_j entries per rack,
// saturating at limit + 1.
long long rack_sequence_count(const SystemConfig& cfg, long long limit) {
  const int k = cfg.k;
  std::vector<std::vector<long double>> binom(k + 1, std::vector<long double>(k + 1, 0));
  for (int a = 0; a <= k; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
  }
  // ways[m] = sequences of length m over the racks seen so far.
  std::vector<long double> ways(k + 1, 0);
  ways[0] = 1;
  for (const auto& rack : cfg.racks) {
    std::vector<long double> next(k + 1, 0);
    for (int m = 0; m <= k; ++m) {
      for (int c = 0; c <= std::min(m, rack.nodes); ++c) next[m] += binom[m][c] * ways[m - c];
    }
    ways = next;
  }
  return ways[k] > static_cast<long double>(limit) ? limit + 1 : static_cast<long long>(ways[k]);
}

void enumerate_structured(const SystemConfig& cfg, const Visitor& visit) {
  std::vector<int> racks;
  std::vector<int> used(cfg.rack_count(), 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(racks.size()) == cfg.k) {
      visit(newcomers_first_scenario(cfg, racks));
      return;
    }
    for (int j = 0; j < cfg.rack_count(); ++j) {
      if (used[j] == cfg.racks[j].nodes) continue;
      ++used[j];
      racks.push_back(j);
      rec();
      racks.pop_back();
      --used[j];
    }
  };
  rec();
}

// Full enumeration of replaced nodes and helper sets. Surviving originals of
// one rack that have helped exactly the same newcomers are interchangeable,
// so only how many of each such class get picked matters.
class ExhaustiveEnumerator {
 public:
  ExhaustiveEnumerator(const SystemConfig& cfg, const Visitor& visit) : cfg_(cfg), visit_(visit) {
    const int n = cfg.total_nodes();
    for (int v = 0; v < n; ++v) {
      rack_.push_back(rack_of_original(cfg, v));
      alive_.push_back(true);
      helped_.push_back(0);
    }
  }

  void run() { step(); }

 private:
  // Candidate helpers grouped into interchangeable classes, each class listed
  // by ascending id.
  std::vector<std::vector<int>> helper_classes(int replaced, bool same_rack, int rack) const {
    const int n = cfg_.total_nodes();
    std::map<std::pair<int, unsigned>, std::vector<int>> originals;
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < static_cast<int>(alive_.size()); ++v) {
      if (!alive_[v] || v == replaced || (rack_[v] == rack) != same_rack) continue;
      if (v < n) {
        originals[{rack_[v], helped_[v]}].push_back(v);
      } else {
        classes.push_back({v});
      }
    }
    for (auto& [key, members] : originals) classes.push_back(std::move(members));
    return classes;
  }

  // Calls `done` for every way to take `need` helpers from the classes.
  void choose(const std::vector<std::vector<int>>& classes, size_t idx, int need,
              std::vector<int>& picked, const std::function<void()>& done) {
    if (need == 0) {
      done();
      return;
    }
    if (idx == classes.size()) return;
    int remaining = 0;
    for (size_t c = idx; c < classes.size(); ++c) remaining += static_cast<int>(classes[c].size());
    if (remaining < need) return;
    const auto& members = classes[idx];
    for (int take = std::min(need, static_cast<int>(members.size())); take >= 0; --take) {
      for (int i = 0; i < take; ++i) picked.push_back(members[i]);
      choose(classes, idx + 1, need - take, picked, done);
      picked.resize(picked.size() - take);
    }
  }

  void step() {
    const int n = cfg_.total_nodes();
    if (static_cast<int>(scenario_.repairs.size()) == cfg_.k) {
      scenario_.dc_attach.clear();
      for (int t = 0; t < cfg_.k; ++t) scenario_.dc_attach.push_back(n + t);
      visit_(scenario_);
      return;
    }
    const unsigned bit = 1u << scenario_.repairs.size();
    for (int j = 0; j < cfg_.rack_count(); ++j) {
      // One representative per class of surviving originals in rack j.
      std::map<unsigned, int> victims;
      for (int v = 0; v < n; ++v) {
        if (alive_[v] && rack_[v] == j) victims.emplace(helped_[v], v);
      }
      for (const auto& [mask, victim] : victims) {
        alive_[victim] = false;
        const auto cheap_classes = helper_classes(victim, true, j);
        const auto expensive_classes = helper_classes(victim, false, j);
        std::vector<int> cheap;
        std::vector<int> expensive;
        choose(cheap_classes, 0, cfg_.cheap_degree(j), cheap, [&]() {
          choose(expensive_classes, 0, cfg_.expensive_degree(j), expensive, [&]() {
            Repair r{j, victim, cheap, expensive};
            for (int h : cheap) helped_[h] |= bit;
            for (int h : expensive) helped_[h] |= bit;
            scenario_.repairs.push_back(std::move(r));
            alive_.push_back(true);
            rack_.push_back(j);
            helped_.push_back(0);
            step();
            helped_.pop_back();
            rack_.pop_back();
            alive_.pop_back();
            scenario_.repairs.pop_back();
            for (int h : cheap) helped_[h] &= ~bit;
            for (int h : expensive) helped_[h] &= ~bit;
          });
        });
        alive_[victim] = true;
      }
    }
  }

  const SystemConfig& cfg_;
  const Visitor& visit_;
  std::vector<int> rack_;
  std::vector<bool> alive_;
  std::vector<unsigned> helped_;
  Scenario scenario_;
};

void enumerate(const SystemConfig& cfg, OracleMode mode, const Visitor& visit) {
  check_guards(cfg, mode);
  if (mode == OracleMode::structured) {
    if (rack_sequence_count(cfg, kStructuredScenarioLimit) > kStructuredScenarioLimit) {
      throw EnumerationTooLarge("more than " + std::to_string(kStructuredScenarioLimit) +
                                " rack sequences");
    }
    enumerate_structured(cfg, visit);
  } else {
    ExhaustiveEnumerator(cfg, visit).run();
  }
}

}  // namespace

std::vector<OracleResult> oracle_min_mincut(const SystemConfig& cfg,
                                            const std::vector<OraclePoint>& points,
                                            OracleMode mode) {
  std::vector<detail::ScaledPoint> scaled;
  for (const auto& p : points) {
    if (p.alpha <= 0 || p.beta_e <= 0) throw InvalidScenario("alpha and beta_e must be positive");
    scaled.push_back(detail::scale_point(p.alpha, p.beta_e, cfg.tau));
  }
  std::vector<OracleResult> best(points.size());
  std::vector<bool> have(points.size(), false);
  enumerate(cfg, mode, [&](const Scenario& s) {
    const detail::Topology topo = detail::build_topology(cfg, s);
    for (size_t i = 0; i < scaled.size(); ++i) {
      Rational value = detail::topology_min_cut(topo, scaled[i]);
      if (!have[i] || value < best[i].value) {
        have[i] = true;
        best[i].value = value;
        best[i].witness = s;
      }
    }
  });
  return best;
}

OracleResult oracle_min_mincut(const SystemConfig& cfg, const Rational& alpha,
                               const Rational& beta_e, OracleMode mode) {
  return oracle_min_mincut(cfg, std::vector<OraclePoint>{{alpha, beta_e}}, mode).front();
}

long long oracle_scenario_count(const SystemConfig& cfg, OracleMode mode) {
  long long count = 0;
  enumerate(cfg, mode, [&](const Scenario&) { ++count; });
  return count;
}

}  // namespace rackregen
