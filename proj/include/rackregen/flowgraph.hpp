#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rackregen/config.hpp"
#include "rackregen/rational.hpp"

namespace rackregen {

struct Capacity {
  bool infinite = false;
  Rational value;

  static Capacity inf() { return {true, Rational(0)}; }
  static Capacity of(const Rational& v) { return {false, v}; }
};

enum class VertexKind { source, collector, inner, outer };

struct Arc {
  int from = 0;
  int to = 0;
  Capacity capacity;
};

struct FlowGraph {
  std::vector<VertexKind> kinds;
  // Storage node each inner/outer vertex belongs to, -1 for S and DC.
  std::vector<int> node_of;
  std::vector<Arc> arcs;
  int source = -1;
  int collector = -1;

  int add_vertex(VertexKind kind, int node = -1);
  void add_arc(int from, int to, Capacity capacity);
  int vertex_count() const { return static_cast<int>(kinds.size()); }
};

// Exact S-DC max-flow. Infinite arcs become 1 + (sum of finite capacities).
// Throws Disconnected when DC is unreachable from S.
Rational min_cut_value(const FlowGraph& graph);

// Checks the structural invariants of an information flow graph: one S, one
// DC, acyclic, one alpha arc per storage node, DC fed by infinite arcs only.
// Returns a list of violations, empty when the graph is well formed.
std::vector<std::string> graph_violations(const FlowGraph& graph);

// Storage nodes are numbered rack-major: originals 0..n-1, then the t-th
// newcomer is n + t.
struct Repair {
  int rack = 0;
  int replaced = 0;
  std::vector<int> cheap_helpers;
  std::vector<int> expensive_helpers;
};

struct Scenario {
  std::vector<Repair> repairs;
  // Storage nodes the data collector connects to.
  std::vector<int> dc_attach;

  std::string describe() const;
};

// Rack of original node `node`.
int rack_of_original(const SystemConfig& cfg, int node);

// Throws InvalidScenario on wrong helper counts, dead or duplicate helpers,
// repeated replacement, or a collector attached to a dead node.
void validate_scenario(const SystemConfig& cfg, const Scenario& scenario);

FlowGraph build_flow_graph(const SystemConfig& cfg, const Scenario& scenario,
                           const Rational& alpha, const Rational& beta_e);

// Newcomers-first wiring for a given sequence of racks: each newcomer replaces
// the lowest-numbered surviving original of its rack and takes helpers from
// earlier newcomers (latest first) before originals (lowest number first).
Scenario newcomers_first_scenario(const SystemConfig& cfg, const std::vector<int>& racks);

enum class OracleMode { structured, exhaustive };

struct OraclePoint {
  Rational alpha;
  Rational beta_e;
};

struct OracleResult {
  Rational value;
  Scenario witness;
};

inline constexpr long long kStructuredScenarioLimit = 1000000;
inline constexpr int kExhaustiveNodeLimit = 8;
inline constexpr int kExhaustiveKLimit = 4;

// Minimum over scenarios of the S-DC mincut. Structured mode enumerates every
// capacity-respecting rack sequence with newcomers-first wiring; exhaustive
// mode also enumerates replaced nodes and helper sets. Ties keep the first
// scenario in enumeration order. Throws EnumerationTooLarge past the guards.
OracleResult oracle_min_mincut(const SystemConfig& cfg, const Rational& alpha,
                               const Rational& beta_e, OracleMode mode);

// Same, for many points at once; each scenario graph is evaluated at every
// point.
std::vector<OracleResult> oracle_min_mincut(const SystemConfig& cfg,
                                            const std::vector<OraclePoint>& points,
                                            OracleMode mode);

// Number of scenarios the given mode would evaluate (after symmetry reduction
// in exhaustive mode). Applies the same guards.
long long oracle_scenario_count(const SystemConfig& cfg, OracleMode mode);

}  // namespace rackregen
