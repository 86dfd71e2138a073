#include "rackregen/verify.hpp"

#include <algorithm>
#include <random>

#include "rackregen/errors.hpp"

namespace rackregen {

std::vector<SamplePoint> sample_points(const ThresholdCurve& curve, const Rational& bound,
                                       int random_count, std::uint64_t seed) {
  std::vector<SamplePoint> out;
  const auto segs = curve.segments();
  for (const auto& seg : segs) {
    out.push_back({"knee", *seg.beta_lo, seg.alpha_at(curve.M, curve.k, *seg.beta_lo)});
  }
  for (const auto& seg : segs) {
    if (!seg.beta_hi) continue;
    Rational mid = (*seg.beta_lo + *seg.beta_hi) / 2;
    out.push_back({"midpoint", mid, seg.alpha_at(curve.M, curve.k, mid)});
  }
  const Rational top = *curve.msr_segment().beta_lo;
  out.push_back({"plateau", 2 * top, curve.M / curve.k});

  // Raw modulo keeps the draws identical across standard libraries.
  std::mt19937_64 rng(seed);
  const Rational lo = *curve.mbr_segment().beta_lo / 2;
  const Rational hi = 2 * top;
  constexpr int kGrid = 1000;
  for (int i = 0; i < random_count; ++i) {
    Rational beta = lo + (hi - lo) * make_rational(static_cast<long>(rng() % (kGrid + 1)), kGrid);
    if (beta == 0) beta = lo;
    Rational alpha = bound * beta * make_rational(static_cast<long>(rng() % kGrid + 1), kGrid);
    out.push_back({"random", beta, alpha});
  }
  return out;
}

VerificationReport verify_coeffs(const SystemConfig& cfg, const CoeffList& coeffs,
                                 const SampleSpec& spec) {
  if (spec.count < 0) throw InvalidConfig("sample count must be nonnegative");
  CoeffList L = coeffs;
  if (spec.inflate_coeff) {
    const int i = *spec.inflate_coeff;
    if (i < 0 || i >= L.size()) {
      throw IndexError("coefficient index " + std::to_string(i) + " outside 0.." +
                       std::to_string(L.size() - 1));
    }
    L.values[i] += 1;
    std::sort(L.values.begin(), L.values.end());
  }
  const ThresholdCurve curve = threshold_curve(L, cfg.file_size);
  const Rational bound = trim_bound(cfg);

  VerificationReport report;
  const auto points = sample_points(curve, bound, spec.count, spec.seed);
  std::vector<OraclePoint> oracle_points;
  for (const auto& p : points) oracle_points.push_back({p.alpha, p.beta_e});
  const auto results = oracle_min_mincut(cfg, oracle_points, spec.mode);
  for (size_t i = 0; i < points.size(); ++i) {
    SampleCheck check{points[i], analytic_mincut(L, bound, points[i].alpha, points[i].beta_e),
                      results[i].value, results[i].witness};
    if (!check.matches()) report.mismatches.push_back(i);
    report.samples.push_back(std::move(check));
  }
  report.greedy = min_mincut_incomes(cfg, SelectionMode::greedy);
  report.exhaustive = min_mincut_incomes(cfg, SelectionMode::exhaustive);
  report.model_sum = rack_model_incomes(cfg).sum();
  return report;
}

VerificationReport verify(const SystemConfig& cfg, const SampleSpec& spec) {
  return verify_coeffs(cfg, rack_model_coeffs(cfg), spec);
}

}  // namespace rackregen
