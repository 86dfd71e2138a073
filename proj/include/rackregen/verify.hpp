#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rackregen/config.hpp"
#include "rackregen/flowgraph.hpp"
#include "rackregen/incomes.hpp"
#include "rackregen/threshold.hpp"

namespace rackregen {

struct SamplePoint {
  std::string label;  // knee, midpoint, plateau or random
  Rational beta_e;
  Rational alpha;
};

// Knees, midpoints of exposed bounded segments and one plateau point, all on
// the curve, followed by `random_count` seeded points with beta_e in
// [f(m-1)/2, 2 f(0)] and alpha in (0, bound*beta_e].
std::vector<SamplePoint> sample_points(const ThresholdCurve& curve, const Rational& bound,
                                       int random_count, std::uint64_t seed);

struct SampleCheck {
  SamplePoint point;
  Rational analytic;
  Rational oracle;
  Scenario witness;

  bool matches() const { return analytic == oracle; }
};

struct VerificationReport {
  std::vector<SampleCheck> samples;
  std::vector<size_t> mismatches;  // indices into samples
  MinMincutResult greedy;
  MinMincutResult exhaustive;
  // Pointwise-independent sum of the incomes the rack model actually uses.
  Rational model_sum;

  bool audit_agrees() const { return greedy.incomes.sum() == exhaustive.incomes.sum(); }
  bool passed() const { return mismatches.empty() && audit_agrees(); }
};

struct SampleSpec {
  int count = 20;
  std::uint64_t seed = 1;
  OracleMode mode = OracleMode::structured;
  // Adds 1 to L[i] before building the analytic side (negative control).
  std::optional<int> inflate_coeff;
};

VerificationReport verify(const SystemConfig& cfg, const SampleSpec& spec);

// Verification against an explicit coefficient list instead of the rack model.
VerificationReport verify_coeffs(const SystemConfig& cfg, const CoeffList& L,
                                 const SampleSpec& spec);

}  // namespace rackregen
