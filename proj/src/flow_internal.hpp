#pragma once

#include <tuple>
#include <vector>

#include "rackregen/flowgraph.hpp"

namespace rackregen::detail {

enum class Weight { infinite, alpha, cheap, expensive };

// Capacity-free shape of an information flow graph.
struct Topology {
  int vertices = 0;
  int source = 0;
  int collector = 1;
  std::vector<std::tuple<int, int, Weight>> arcs;
};

// Capacities of one (alpha, beta_e) point over a common denominator.
struct ScaledPoint {
  mpz_class denom;
  mpz_class alpha;
  mpz_class cheap;
  mpz_class expensive;
};

ScaledPoint scale_point(const Rational& alpha, const Rational& beta_e, const Rational& tau);

Topology build_topology(const SystemConfig& cfg, const Scenario& scenario);

Rational topology_min_cut(const Topology& topo, const ScaledPoint& point);

}  // namespace rackregen::detail
