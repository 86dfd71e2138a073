#include "rackregen/flowgraph.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <queue>
#include <set>

#include "flow_internal.hpp"
#include "rackregen/errors.hpp"

namespace rackregen {

namespace {

template <class T>
class Dinic {
 public:
  explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

  void add(int u, int v, const T& cap) {
    edges_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], T(0)});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  T run(int s, int t) {
    T flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (true) {
        T pushed = dfs(s, t, T(-1));
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    int next;
    T cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // limit < 0 stands for "unbounded" at the source.
  T dfs(int u, int t, const T& limit) {
    if (u == t) return limit;
    for (int& e = it_[u]; e != -1; e = edges_[e].next) {
      Edge& edge = edges_[e];
      if (edge.cap <= 0 || level_[edge.to] != level_[u] + 1) continue;
      T want = (limit < 0 || edge.cap < limit) ? edge.cap : limit;
      T got = dfs(edge.to, t, want);
      if (got > 0) {
        edge.cap -= got;
        edges_[e ^ 1].cap += got;
        return got;
      }
    }
    return T(0);
  }

  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

bool reachable(int n, const std::vector<std::pair<int, int>>& arcs, int s, int t) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : arcs) adj[u].push_back(v);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen[t];
}

// Max-flow over integer capacities; `inf_count` arcs get the surrogate.
Rational integer_max_flow(int n, int s, int t,
                          const std::vector<std::tuple<int, int, const mpz_class*>>& finite,
                          const std::vector<std::pair<int, int>>& infinite,
                          const mpz_class& denom) {
  mpz_class total = 0;
  for (const auto& arc : finite) total += *std::get<2>(arc);
  const mpz_class inf = total + 1;
  mpz_class flow;
  // Flow never exceeds the sum of finite capacities plus one surrogate, so
  // int64 is exact whenever the surrogate itself is small.
  if (inf < mpz_class(1) << 60) {
    Dinic<long long> dinic(n);
    for (const auto& [u, v, cap] : finite) dinic.add(u, v, cap->get_si());
    for (auto [u, v] : infinite) dinic.add(u, v, inf.get_si());
    flow = static_cast<long>(dinic.run(s, t));
  } else {
    Dinic<mpz_class> dinic(n);
    for (const auto& [u, v, cap] : finite) dinic.add(u, v, *cap);
    for (auto [u, v] : infinite) dinic.add(u, v, inf);
    flow = dinic.run(s, t);
  }
  Rational out(flow, denom);
  out.canonicalize();
  return out;
}

}  // namespace

int FlowGraph::add_vertex(VertexKind kind, int node) {
  kinds.push_back(kind);
  node_of.push_back(node);
  const int id = vertex_count() - 1;
  if (kind == VertexKind::source) source = id;
  if (kind == VertexKind::collector) collector = id;
  return id;
}

void FlowGraph::add_arc(int from, int to, Capacity capacity) {
  arcs.push_back({from, to, std::move(capacity)});
}

Rational min_cut_value(const FlowGraph& graph) {
  const int n = graph.vertex_count();
  if (graph.source < 0 || graph.collector < 0) throw Disconnected("graph lacks S or DC");
  std::vector<std::pair<int, int>> shape;
  for (const auto& a : graph.arcs) shape.emplace_back(a.from, a.to);
  if (!reachable(n, shape, graph.source, graph.collector)) {
    throw Disconnected("no path from S to DC");
  }
  mpz_class denom = 1;
  for (const auto& a : graph.arcs) {
    if (a.capacity.infinite) continue;
    if (a.capacity.value < 0) throw InvalidScenario("negative capacity");
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), a.capacity.value.get_den_mpz_t());
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(graph.arcs.size());
  std::vector<std::tuple<int, int, const mpz_class*>> finite;
  std::vector<std::pair<int, int>> infinite;
  for (const auto& a : graph.arcs) {
    if (a.capacity.infinite) {
      infinite.emplace_back(a.from, a.to);
    } else {
      scaled.push_back(a.capacity.value.get_num() * (denom / a.capacity.value.get_den()));
    }
  }
  size_t next = 0;
  for (const auto& a : graph.arcs) {
    if (!a.capacity.infinite) finite.emplace_back(a.from, a.to, &scaled[next++]);
  }
  return integer_max_flow(n, graph.source, graph.collector, finite, infinite, denom);
}

std::vector<std::string> graph_violations(const FlowGraph& graph) {
  std::vector<std::string> out;
  const int n = graph.vertex_count();
  int sources = 0;
  int collectors = 0;
  for (auto kind : graph.kinds) {
    sources += kind == VertexKind::source;
    collectors += kind == VertexKind::collector;
  }
  if (sources != 1) out.push_back("expected one source, found " + std::to_string(sources));
  if (collectors != 1) out.push_back("expected one collector, found " + std::to_string(collectors));

  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> adj(n);
  std::vector<int> alpha_arcs(n, 0);
  for (const auto& a : graph.arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      out.push_back("arc endpoint out of range");
      return out;
    }
    adj[a.from].push_back(a.to);
    ++indegree[a.to];
    if (graph.kinds[a.from] == VertexKind::inner) {
      if (graph.kinds[a.to] != VertexKind::outer || graph.node_of[a.to] != graph.node_of[a.from]) {
        out.push_back("inner vertex of node " + std::to_string(graph.node_of[a.from]) +
                      " feeds something other than its outer vertex");
      }
      ++alpha_arcs[a.from];
    }
    if (graph.kinds[a.to] == VertexKind::collector && !a.capacity.infinite) {
      out.push_back("finite arc into DC");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (graph.kinds[v] == VertexKind::inner && alpha_arcs[v] != 1) {
      out.push_back("node " + std::to_string(graph.node_of[v]) + " has " +
                    std::to_string(alpha_arcs[v]) + " storage arcs");
    }
  }
  std::vector<int> deg = indegree;
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 0) ready.push_back(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    int u = ready.back();
    ready.pop_back();
    ++visited;
    for (int v : adj[u]) {
      if (--deg[v] == 0) ready.push_back(v);
    }
  }
  if (visited != n) out.push_back("graph has a cycle");
  return out;
}

std::string Scenario::describe() const {
  std::string out;
  for (size_t t = 0; t < repairs.size(); ++t) {
    const auto& r = repairs[t];
    if (t) out += "; ";
    out += "r" + std::to_string(r.rack + 1) + ":" + std::to_string(r.replaced) + "<-[";
    for (size_t i = 0; i < r.cheap_helpers.size(); ++i) {
      out += (i ? "," : "") + std::to_string(r.cheap_helpers[i]);
    }
    out += "|";
    for (size_t i = 0; i < r.expensive_helpers.size(); ++i) {
      out += (i ? "," : "") + std::to_string(r.expensive_helpers[i]);
    }
    out += "]";
  }
  return out;
}

int rack_of_original(const SystemConfig& cfg, int node) {
  int start = 0;
  for (int j = 0; j < cfg.rack_count(); ++j) {
    start += cfg.racks[j].nodes;
    if (node < start) return j;
  }
  return -1;
}

void validate_scenario(const SystemConfig& cfg, const Scenario& scenario) {
  const int n = cfg.total_nodes();
  std::vector<int> rack(n);
  for (int v = 0; v < n; ++v) rack[v] = rack_of_original(cfg, v);
  std::vector<bool> alive(n, true);
  auto fail = [](const std::string& msg) { throw InvalidScenario(msg); };

  for (size_t t = 0; t < scenario.repairs.size(); ++t) {
    const auto& r = scenario.repairs[t];
    const std::string who = "newcomer " + std::to_string(t);
    if (r.rack < 0 || r.rack >= cfg.rack_count()) fail(who + ": rack out of range");
    if (r.replaced < 0 || r.replaced >= n) fail(who + ": replaced node is not an original");
    if (!alive[r.replaced]) fail(who + ": node " + std::to_string(r.replaced) + " already replaced");
    if (rack[r.replaced] != r.rack) fail(who + ": replaced node is in another rack");
    alive[r.replaced] = false;
    if (static_cast<int>(r.cheap_helpers.size()) != cfg.cheap_degree(r.rack)) {
      fail(who + ": expected " + std::to_string(cfg.cheap_degree(r.rack)) + " cheap helpers");
    }
    if (static_cast<int>(r.expensive_helpers.size()) != cfg.expensive_degree(r.rack)) {
      fail(who + ": expected " + std::to_string(cfg.expensive_degree(r.rack)) +
           " expensive helpers");
    }
    std::set<int> used;
    auto check = [&](int h, bool same_rack) {
      if (h < 0 || h >= static_cast<int>(alive.size()) || !alive[h]) {
        fail(who + ": helper " + std::to_string(h) + " is not alive");
      }
      if ((rack[h] == r.rack) != same_rack) {
        fail(who + ": helper " + std::to_string(h) + " is in the wrong rack");
      }
      if (!used.insert(h).second) fail(who + ": helper " + std::to_string(h) + " repeated");
    };
    for (int h : r.cheap_helpers) check(h, true);
    for (int h : r.expensive_helpers) check(h, false);
    alive.push_back(true);
    rack.push_back(r.rack);
  }
  std::set<int> attached;
  for (int v : scenario.dc_attach) {
    if (v < 0 || v >= static_cast<int>(alive.size()) || !alive[v]) {
      fail("collector attached to dead node " + std::to_string(v));
    }
    if (!attached.insert(v).second) fail("collector attached twice to " + std::to_string(v));
  }
  if (static_cast<int>(attached.size()) != cfg.k) {
    fail("collector must attach to exactly k = " + std::to_string(cfg.k) + " nodes");
  }
}

namespace detail {

ScaledPoint scale_point(const Rational& alpha, const Rational& beta_e, const Rational& tau) {
  if (alpha < 0 || beta_e < 0) throw InvalidScenario("alpha and beta_e must be nonnegative");
  const Rational cheap = tau * beta_e;
  ScaledPoint p;
  p.denom = alpha.get_den();
  mpz_lcm(p.denom.get_mpz_t(), p.denom.get_mpz_t(), beta_e.get_den_mpz_t());
  mpz_lcm(p.denom.get_mpz_t(), p.denom.get_mpz_t(), cheap.get_den_mpz_t());
  p.alpha = alpha.get_num() * (p.denom / alpha.get_den());
  p.cheap = cheap.get_num() * (p.denom / cheap.get_den());
  p.expensive = beta_e.get_num() * (p.denom / beta_e.get_den());
  return p;
}

Topology build_topology(const SystemConfig& cfg, const Scenario& scenario) {
  validate_scenario(cfg, scenario);
  const int n = cfg.total_nodes();
  const int nodes = n + static_cast<int>(scenario.repairs.size());
  Topology topo;
  topo.vertices = 2 + 2 * nodes;
  auto in = [](int node) { return 2 + 2 * node; };
  auto out = [](int node) { return 3 + 2 * node; };
  for (int v = 0; v < n; ++v) {
    topo.arcs.emplace_back(topo.source, in(v), Weight::infinite);
    topo.arcs.emplace_back(in(v), out(v), Weight::alpha);
  }
  for (size_t t = 0; t < scenario.repairs.size(); ++t) {
    const auto& r = scenario.repairs[t];
    const int v = n + static_cast<int>(t);
    for (int h : r.cheap_helpers) topo.arcs.emplace_back(out(h), in(v), Weight::cheap);
    for (int h : r.expensive_helpers) topo.arcs.emplace_back(out(h), in(v), Weight::expensive);
    topo.arcs.emplace_back(in(v), out(v), Weight::alpha);
  }
  for (int v : scenario.dc_attach) topo.arcs.emplace_back(out(v), topo.collector, Weight::infinite);
  return topo;
}

Rational topology_min_cut(const Topology& topo, const ScaledPoint& point) {
  std::vector<std::tuple<int, int, const mpz_class*>> finite;
  std::vector<std::pair<int, int>> infinite;
  finite.reserve(topo.arcs.size());
  for (const auto& [u, v, w] : topo.arcs) {
    switch (w) {
      case Weight::infinite: infinite.emplace_back(u, v); break;
      case Weight::alpha: finite.emplace_back(u, v, &point.alpha); break;
      case Weight::cheap: finite.emplace_back(u, v, &point.cheap); break;
      case Weight::expensive: finite.emplace_back(u, v, &point.expensive); break;
    }
  }
  return integer_max_flow(topo.vertices, topo.source, topo.collector, finite, infinite,
                          point.denom);
}

}  // namespace detail

FlowGraph build_flow_graph(const SystemConfig& cfg, const Scenario& scenario,
                           const Rational& alpha, const Rational& beta_e) {
  if (alpha <= 0 || beta_e <= 0) throw InvalidScenario("alpha and beta_e must be positive");
  const detail::Topology topo = detail::build_topology(cfg, scenario);
  const int n = cfg.total_nodes();
  FlowGraph g;
  g.add_vertex(VertexKind::source);
  g.add_vertex(VertexKind::collector);
  for (int v = 0; v < n + static_cast<int>(scenario.repairs.size()); ++v) {
    g.add_vertex(VertexKind::inner, v);
    g.add_vertex(VertexKind::outer, v);
  }
  const Rational cheap = cfg.tau * beta_e;
  for (const auto& [u, v, w] : topo.arcs) {
    switch (w) {
      case detail::Weight::infinite: g.add_arc(u, v, Capacity::inf()); break;
      case detail::Weight::alpha: g.add_arc(u, v, Capacity::of(alpha)); break;
      case detail::Weight::cheap: g.add_arc(u, v, Capacity::of(cheap)); break;
      case detail::Weight::expensive: g.add_arc(u, v, Capacity::of(beta_e)); break;
    }
  }
  return g;
}

Scenario newcomers_first_scenario(const SystemConfig& cfg, const std::vector<int>& racks) {
  const int n = cfg.total_nodes();
  std::vector<int> rack(n);
  for (int v = 0; v < n; ++v) rack[v] = rack_of_original(cfg, v);
  std::vector<bool> alive(n, true);
  Scenario s;
  for (int j : racks) {
    if (j < 0 || j >= cfg.rack_count()) throw InvalidScenario("rack out of range");
    Repair r;
    r.rack = j;
    r.replaced = -1;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && rack[v] == j) {
        r.replaced = v;
        break;
      }
    }
    if (r.replaced < 0) throw InvalidScenario("rack " + std::to_string(j + 1) + " has no originals left");
    alive[r.replaced] = false;
    std::vector<int> same;
    std::vector<int> other;
    for (int v = static_cast<int>(alive.size()) - 1; v >= n; --v) {
      (rack[v] == j ? same : other).push_back(v);
    }
    for (int v = 0; v < n; ++v) {
      if (alive[v]) (rack[v] == j ? same : other).push_back(v);
    }
    const int dc = cfg.cheap_degree(j);
    const int de = cfg.expensive_degree(j);
    if (static_cast<int>(same.size()) < dc || static_cast<int>(other.size()) < de) {
      throw InvalidScenario("not enough helpers alive");
    }
    r.cheap_helpers.assign(same.begin(), same.begin() + dc);
    r.expensive_helpers.assign(other.begin(), other.begin() + de);
    s.repairs.push_back(std::move(r));
    alive.push_back(true);
    rack.push_back(j);
  }
  for (size_t t = 0; t < racks.size(); ++t) s.dc_attach.push_back(n + static_cast<int>(t));
  return s;
}

}  // namespace rackregen
