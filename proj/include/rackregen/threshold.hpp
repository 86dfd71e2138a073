#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rackregen/config.hpp"
#include "rackregen/incomes.hpp"
#include "rackregen/rational.hpp"

namespace rackregen {

// Segment i of the threshold function: alpha = (M - g*beta)/(k - i) on
// [beta_lo, beta_hi). beta_hi is unset for the MSR plateau. beta_lo is unset
// when the knee lies at infinity (zero denominator), which makes the segment
// empty.
struct ThresholdSegment {
  int index = 0;
  Rational coeff;  // L[i]
  Rational g;      // L[0] + ... + L[i-1]
  std::optional<Rational> beta_lo;
  std::optional<Rational> beta_hi;
  bool empty = false;

  Rational alpha_at(const Rational& M, int k, const Rational& beta) const;
};

struct ThresholdCurve {
  Rational M;
  int k = 0;
  CoeffList L;
  // One entry per coefficient, empty ones included, in index order.
  std::vector<ThresholdSegment> all;

  // Nonempty segments, descending beta_lo.
  std::vector<ThresholdSegment> segments() const;
  const ThresholdSegment& msr_segment() const;
  const ThresholdSegment& mbr_segment() const;
};

ThresholdCurve threshold_curve(const CoeffList& L, const Rational& M);

// Throws BelowMbr when beta_e is left of the last knee.
Rational alpha_star(const ThresholdCurve& curve, const Rational& beta_e);

struct TradeoffPoint {
  Rational beta_e;
  Rational alpha;
  std::vector<Rational> gamma;  // per rack
  std::vector<Rational> cost;   // per rack
};

// Fills gamma and cost for the given beta_e; alpha is left at zero.
TradeoffPoint repair_metrics(const SystemConfig& cfg, const Rational& beta_e);

struct ExtremalPoints {
  TradeoffPoint msr;
  TradeoffPoint mbr;
};

ExtremalPoints extremal_points(const ThresholdCurve& curve, const SystemConfig& cfg);

// Curve of the rack model for cfg.
ThresholdCurve rack_curve(const SystemConfig& cfg);

struct BasicModel {
  int k = 0;
  int d = 0;
};

struct StaticModel {
  int k = 0;
  int cheap_degree = 0;
  int expensive_degree = 0;
  Rational tau{1};
};

// Static-cost parameters taken from the first rack of cfg.
StaticModel static_model_of(const SystemConfig& cfg);
BasicModel basic_model_of(const SystemConfig& cfg);

CoeffList basic_coeffs(const BasicModel& model);
CoeffList static_coeffs(const StaticModel& model);

// The basic curve is checked knee by knee against the closed form of the
// functional-repair threshold and throws ClosedFormMismatch on disagreement.
ThresholdCurve reference_curve(const BasicModel& model, const Rational& M);
ThresholdCurve reference_curve(const StaticModel& model, const Rational& M);

// Two-rack closed form valid when d_e1 = d_c2 + 1, d_e2 = d_c1 + 1,
// d_e1 >= d_c2*tau and k > d_c1 + 1.
struct SpecialCaseResult {
  ThresholdCurve closed_form;
  ThresholdCurve generic;
  // Exposed-knee disagreements between the two, human readable.
  std::vector<std::string> discrepancies;
};

SpecialCaseResult special_case_curve(const SystemConfig& cfg);

// Sum over L of min(L[i]*beta, alpha), plus the k - m trimmed newcomers whose
// incomes are capped at min(bound*beta, alpha).
Rational analytic_mincut(const CoeffList& L, const Rational& bound, const Rational& alpha,
                         const Rational& beta_e);

}  // namespace rackregen
