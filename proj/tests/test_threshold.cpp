#include <gtest/gtest.h>

#include "rackregen/errors.hpp"
#include "rackregen/threshold.hpp"
#include "support.hpp"

namespace rackregen {
namespace {

using testing::R;
using testing::Rs;
using testing::two_rack;

CoeffList coeffs(std::vector<Rational> values, int k) {
  CoeffList L;
  L.values = std::move(values);
  L.k = k;
  return L;
}

std::vector<Rational> knees(const ThresholdCurve& c) {
  std::vector<Rational> out;
  for (const auto& s : c.segments()) out.push_back(*s.beta_lo);
  return out;
}

TEST(ThresholdCurve, FourNewcomerSegments) {
  const Rational M = 3;
  auto curve = threshold_curve(coeffs(Rs("2", "3", "4", "5"), 4), M);
  EXPECT_EQ(knees(curve), (std::vector<Rational>{M / 8, M / 11, M / 13, M / 14}));
  const Rational beta = R("1/5");
  EXPECT_EQ(curve.all[0].alpha_at(M, 4, beta), M / 4);
  EXPECT_EQ(curve.all[1].alpha_at(M, 4, beta), (M - 2 * beta) / 3);
  EXPECT_EQ(curve.all[2].alpha_at(M, 4, beta), (M - 5 * beta) / 2);
  EXPECT_EQ(curve.all[3].alpha_at(M, 4, beta), M - 9 * beta);
}

TEST(ThresholdCurve, DuplicateCoefficientLeavesAnEmptyInterval) {
  auto curve = threshold_curve(coeffs(Rs("3", "3", "5"), 3), 1);
  EXPECT_EQ(knees(curve), Rs("1/9", "1/11"));
  ASSERT_EQ(curve.all.size(), 3u);
  EXPECT_TRUE(curve.all[1].empty);
  EXPECT_EQ(curve.all[2].g, 6);
}

TEST(ThresholdCurve, TrimmedListEndsAtTheBound) {
  auto curve = threshold_curve(coeffs(Rs("5", "7"), 3), 1);
  EXPECT_EQ(knees(curve), Rs("1/15", "1/19"));
  EXPECT_EQ(alpha_star(curve, R("1/19")), R("7/19"));
  EXPECT_EQ(alpha_star(curve, R("1/17")), (1 - 5 * R("1/17")) / 2);
}

TEST(ThresholdCurve, RejectsBadLists) {
  EXPECT_THROW(threshold_curve(coeffs(std::vector<Rational>(), 3), 1), EmptyCoeffList);
  EXPECT_THROW(threshold_curve(coeffs(Rs("1", "2"), 1), 1), EmptyCoeffList);
  EXPECT_THROW(threshold_curve(coeffs(Rs("2", "1"), 2), 1), EmptyCoeffList);
}

TEST(ThresholdCurve, ZeroCoefficientPutsTheFirstKneeAtInfinity) {
  auto curve = threshold_curve(coeffs(Rs("0", "2"), 2), 1);
  EXPECT_FALSE(curve.all[0].beta_lo.has_value());
  EXPECT_TRUE(curve.all[0].empty);
  EXPECT_EQ(knees(curve), Rs("1/2"));
}

TEST(AlphaStar, KneesBelongToTheSegmentStartingThere) {
  const Rational M = 1;
  auto curve = threshold_curve(coeffs(Rs("2", "3", "4", "5"), 4), M);
  EXPECT_EQ(alpha_star(curve, M / 8), M / 4);
  EXPECT_EQ(alpha_star(curve, M / 14), 5 * M / 14);
  EXPECT_EQ(alpha_star(curve, 1000), M / 4);
  EXPECT_THROW(alpha_star(curve, R("1/15")), BelowMbr);
}

TEST(AlphaStar, ContinuousAcrossKnees) {
  auto curve = rack_curve(testing::two_rack(10, 11, 2, {6, 5}, {6, 5}));
  const auto segs = curve.segments();
  for (size_t i = 1; i < segs.size(); ++i) {
    // Segment i ends where segment i-1 starts, and both give the same alpha.
    const Rational& b = *segs[i - 1].beta_lo;
    EXPECT_EQ(*segs[i].beta_hi, b);
    EXPECT_EQ(segs[i].alpha_at(curve.M, curve.k, b), segs[i - 1].alpha_at(curve.M, curve.k, b));
  }
}

TEST(ExtremalPoints, TrimmedMbrSitsOnGammaOne) {
  auto cfg = two_rack(3, 6, 2, {2, 1}, {5, 4});
  auto pts = extremal_points(rack_curve(cfg), cfg);
  EXPECT_EQ(pts.mbr.beta_e, R("1/19"));
  EXPECT_EQ(pts.mbr.alpha, R("7/19"));
  EXPECT_EQ(pts.mbr.gamma[0], pts.mbr.alpha);
  EXPECT_EQ(pts.msr.alpha * cfg.k, cfg.file_size);
  EXPECT_EQ(pts.msr.beta_e, R("1/15"));
}

TEST(ExtremalPoints, RackMbrPoint) {
  auto cfg = two_rack(10, 11, 2, {6, 5}, {6, 5});
  auto pts = extremal_points(rack_curve(cfg), cfg);
  EXPECT_EQ(pts.mbr.beta_e, R("1/94"));
  EXPECT_EQ(pts.mbr.alpha, R("16/94"));
}

TEST(ExtremalPoints, TauOneGivesEqualGammas) {
  auto cfg = two_rack(4, 4, 1, {3, 1}, {3, 2});
  auto pts = extremal_points(rack_curve(cfg), cfg);
  EXPECT_EQ(pts.msr.gamma[0], pts.msr.gamma[1]);
  EXPECT_EQ(pts.msr.gamma[0], cfg.d * pts.msr.beta_e);
}

TEST(RepairMetrics, CostPerRack) {
  auto cfg = two_rack(5, 12, 2, {7, 6}, {7, 6});
  auto p = repair_metrics(cfg, R("1/50"));
  EXPECT_EQ(p.cost[0], R("72/50"));
  EXPECT_EQ(p.gamma[0], R("18/50"));
  auto flat = two_rack(5, 12, 1, {7, 6}, {7, 6});
  EXPECT_EQ(repair_metrics(flat, R("1/40")).cost[0], R("66/40"));
  auto uniform = SystemConfig::create(1, 4, 4, 2, 3, 3, {{3, 1}, {3, 2}});
  auto q = repair_metrics(uniform, R("1/7"));
  for (int j = 0; j < 2; ++j) EXPECT_EQ(q.cost[j], 3 * q.gamma[j]);
}

TEST(ReferenceCurve, BasicModel) {
  auto curve = reference_curve(BasicModel{2, 3}, 1);
  EXPECT_EQ(curve.L.values, Rs("2", "3"));
  EXPECT_EQ(*curve.all[0].beta_lo, R("1/4"));
  EXPECT_EQ(*curve.all[0].beta_lo * 3, R("3/4"));
  EXPECT_THROW(reference_curve(BasicModel{4, 3}, 1), InvalidModelParams);
  EXPECT_THROW(reference_curve(BasicModel{0, 3}, 1), InvalidModelParams);
}

TEST(ReferenceCurve, StaticModelKnees) {
  auto curve = reference_curve(StaticModel{10, 5, 6, 2}, 1);
  EXPECT_EQ(knees(curve), Rs("1/20", "1/29", "1/37", "1/44", "1/50", "1/60", "1/68", "1/74",
                              "1/78", "1/80"));
  EXPECT_THROW(static_coeffs(StaticModel{10, 2, 3, 2}), InvalidModelParams);
}

TEST(SpecialCase, MatchesEngineOnWorkedConfig) {
  auto cfg = two_rack(4, 4, R("3/2"), {2, 1}, {3, 2});
  auto result = special_case_curve(cfg);
  EXPECT_TRUE(result.discrepancies.empty());
  EXPECT_EQ(result.generic.L.values, Rs("3/2", "3", "3", "9/2"));
  EXPECT_EQ(knees(result.closed_form), Rs("1/6", "2/21", "1/12"));
  EXPECT_TRUE(result.closed_form.all[2].empty);
}

TEST(SpecialCase, Preconditions) {
  EXPECT_THROW(special_case_curve(two_rack(4, 4, R("8/5"), {2, 1}, {3, 2})), PreconditionUnmet);
  EXPECT_THROW(special_case_curve(two_rack(2, 4, 1, {2, 1}, {3, 2})), PreconditionUnmet);
  EXPECT_THROW(special_case_curve(two_rack(4, 4, 2, {3, 1}, {3, 2})), PreconditionUnmet);
}

TEST(AnalyticMincut, CountsTrimmedNewcomersAtTheBound) {
  auto L = coeffs(Rs("5", "7"), 3);
  EXPECT_EQ(analytic_mincut(L, 7, R("7/19"), R("1/19")), 1);
  EXPECT_EQ(analytic_mincut(L, 7, 1, R("1/10")), R("19/10"));
  EXPECT_EQ(analytic_mincut(L, 7, R("1/100"), 1), R("3/100"));
}

}  // namespace
}  // namespace rackregen
