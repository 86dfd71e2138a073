#include "rackregen/threshold.hpp"

#include <algorithm>

#include "rackregen/errors.hpp"

namespace rackregen {

namespace {

// f(i) = M / (L[i](k-i) + g(i)); unset when the denominator vanishes.
std::optional<Rational> knee(const Rational& M, int k, int i, const Rational& coeff,
                             const Rational& g) {
  Rational denom = coeff * (k - i) + g;
  if (denom == 0) return std::nullopt;
  return Rational(M / denom);
}

// Marks segment i empty when [f(i), f(i-1)) has no interior.
void settle_bounds(std::vector<ThresholdSegment>& segs) {
  for (size_t i = 0; i < segs.size(); ++i) {
    auto& seg = segs[i];
    seg.beta_hi = i == 0 ? std::nullopt : segs[i - 1].beta_lo;
    if (!seg.beta_lo) {
      seg.empty = true;
    } else if (seg.beta_hi) {
      seg.empty = !(*seg.beta_lo < *seg.beta_hi);
    }
  }
}

std::string show(const std::optional<Rational>& v) { return v ? to_string(*v) : "inf"; }

}  // namespace

Rational ThresholdSegment::alpha_at(const Rational& M, int k, const Rational& beta) const {
  return (M - g * beta) / (k - index);
}

std::vector<ThresholdSegment> ThresholdCurve::segments() const {
  std::vector<ThresholdSegment> out;
  for (const auto& s : all) {
    if (!s.empty) out.push_back(s);
  }
  return out;
}

const ThresholdSegment& ThresholdCurve::msr_segment() const {
  for (const auto& s : all) {
    if (!s.empty) return s;
  }
  throw EmptyCoeffList("curve has no segments");
}

const ThresholdSegment& ThresholdCurve::mbr_segment() const {
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    if (!it->empty) return *it;
  }
  throw EmptyCoeffList("curve has no segments");
}

ThresholdCurve threshold_curve(const CoeffList& L, const Rational& M) {
  if (L.values.empty()) throw EmptyCoeffList("coefficient list is empty");
  if (L.size() > L.k) throw EmptyCoeffList("coefficient list longer than k");
  if (!std::is_sorted(L.values.begin(), L.values.end())) {
    throw EmptyCoeffList("coefficient list is not ascending");
  }
  ThresholdCurve curve;
  curve.M = M;
  curve.k = L.k;
  curve.L = L;
  Rational g = 0;
  for (int i = 0; i < L.size(); ++i) {
    ThresholdSegment seg;
    seg.index = i;
    seg.coeff = L.values[i];
    seg.g = g;
    seg.beta_lo = knee(M, L.k, i, seg.coeff, g);
    curve.all.push_back(seg);
    g += seg.coeff;
  }
  settle_bounds(curve.all);
  return curve;
}

Rational alpha_star(const ThresholdCurve& curve, const Rational& beta_e) {
  for (const auto& seg : curve.all) {
    if (seg.empty) continue;
    if (*seg.beta_lo <= beta_e && (!seg.beta_hi || beta_e < *seg.beta_hi)) {
      return seg.alpha_at(curve.M, curve.k, beta_e);
    }
  }
  throw BelowMbr("beta_e = " + to_string(beta_e) + " is below the MBR point " +
                 to_string(*curve.mbr_segment().beta_lo));
}

TradeoffPoint repair_metrics(const SystemConfig& cfg, const Rational& beta_e) {
  TradeoffPoint p;
  p.beta_e = beta_e;
  for (int j = 0; j < cfg.rack_count(); ++j) {
    const int dc = cfg.cheap_degree(j);
    const int de = cfg.expensive_degree(j);
    p.gamma.push_back((dc * cfg.tau + de) * beta_e);
    p.cost.push_back(beta_e * (cfg.cheap_cost * dc * cfg.tau + cfg.expensive_cost * de));
  }
  return p;
}

ExtremalPoints extremal_points(const ThresholdCurve& curve, const SystemConfig& cfg) {
  const auto& first = curve.msr_segment();
  const auto& last = curve.mbr_segment();
  ExtremalPoints out;
  out.msr = repair_metrics(cfg, *first.beta_lo);
  out.msr.alpha = curve.M / curve.k;
  out.mbr = repair_metrics(cfg, *last.beta_lo);
  out.mbr.alpha = last.alpha_at(curve.M, curve.k, *last.beta_lo);
  return out;
}

ThresholdCurve rack_curve(const SystemConfig& cfg) {
  return threshold_curve(rack_model_coeffs(cfg), cfg.file_size);
}

StaticModel static_model_of(const SystemConfig& cfg) {
  return {cfg.k, cfg.cheap_degree(0), cfg.expensive_degree(0), cfg.tau};
}

BasicModel basic_model_of(const SystemConfig& cfg) { return {cfg.k, cfg.d}; }

CoeffList basic_coeffs(const BasicModel& model) {
  if (model.k < 1 || model.k > model.d) {
    throw InvalidModelParams("basic model needs 1 <= k <= d, got k=" + std::to_string(model.k) +
                             " d=" + std::to_string(model.d));
  }
  CoeffList L;
  L.k = model.k;
  for (int i = model.k - 1; i >= 0; --i) L.values.emplace_back(model.d - i);
  return L;
}

CoeffList static_coeffs(const StaticModel& m) {
  if (m.k < 1 || m.cheap_degree < 0 || m.expensive_degree < 0 || m.tau < 1) {
    throw InvalidModelParams("static model needs k >= 1, degrees >= 0, tau >= 1");
  }
  if (m.k > m.cheap_degree + m.expensive_degree) {
    throw InvalidModelParams("static model needs k <= d_c + d_e");
  }
  CoeffList L;
  L.k = m.k;
  for (int i = 0; i <= std::min(m.cheap_degree, m.k - 1); ++i) {
    L.values.push_back((m.cheap_degree - i) * m.tau + m.expensive_degree);
  }
  for (int i = 1; i <= m.k - m.cheap_degree - 1; ++i) {
    L.values.emplace_back(m.expensive_degree - i);
  }
  std::sort(L.values.begin(), L.values.end());
  return L;
}

ThresholdCurve reference_curve(const BasicModel& model, const Rational& M) {
  ThresholdCurve curve = threshold_curve(basic_coeffs(model), M);
  const int k = model.k;
  const int d = model.d;
  for (const auto& seg : curve.all) {
    const int i = seg.index;
    // Closed form in terms of gamma = d*beta.
    Rational f_gamma = Rational(2 * d) * M / ((2 * k - i - 1) * i + 2 * k * (d - k + 1));
    Rational g_gamma = Rational(i * (2 * d - 2 * k + i + 1), 2 * d);
    g_gamma.canonicalize();
    if (!seg.beta_lo || *seg.beta_lo * d != f_gamma || seg.g != g_gamma * d) {
      throw ClosedFormMismatch("basic model knee " + std::to_string(i) + ": engine gives beta " +
                               show(seg.beta_lo) + ", closed form gives gamma " +
                               to_string(f_gamma));
    }
  }
  return curve;
}

ThresholdCurve reference_curve(const StaticModel& model, const Rational& M) {
  return threshold_curve(static_coeffs(model), M);
}

SpecialCaseResult special_case_curve(const SystemConfig& cfg) {
  if (cfg.rack_count() != 2) throw PreconditionUnmet("closed form needs exactly 2 racks");
  const int k = cfg.k;
  const int d = cfg.d;
  const int dc1 = cfg.cheap_degree(0);
  const int dc2 = cfg.cheap_degree(1);
  const int de1 = cfg.expensive_degree(0);
  const int de2 = cfg.expensive_degree(1);
  const Rational& tau = cfg.tau;
  const Rational& M = cfg.file_size;
  if (de1 != dc2 + 1 || de2 != dc1 + 1) {
    throw PreconditionUnmet("closed form needs d_e1 = d_c2 + 1 and d_e2 = d_c1 + 1");
  }
  if (Rational(de1) < dc2 * tau) throw PreconditionUnmet("closed form needs d_e1 >= d_c2 * tau");
  if (k <= dc1 + 1) throw PreconditionUnmet("closed form needs k > d_c1 + 1");

  auto g1 = [&](int i) { return make_rational(i * (2 * d - 2 * k + i + 1), 2); };
  auto g2 = [&](int i) { return Rational(i * (2 * de1 + tau * i - tau) / 2); };
  auto f1 = [&](int i) {
    return Rational(2 * M / (tau * (2 * k * (d - k) + (i + 1) * (2 * k - i))));
  };
  auto f2 = [&](int i) {
    return Rational(2 * M / (2 * de1 + 2 * de1 * dc1 -
                             tau * (i * (i - 2 * k + 1) +
                                    2 * (k * k - k - k * d + de1 + de1 * dc1))));
  };

  const int K = k - dc1 - 1;
  SpecialCaseResult out;
  out.generic = rack_curve(cfg);
  ThresholdCurve& closed = out.closed_form;
  closed.M = M;
  closed.k = k;
  closed.L.k = k;
  for (int i = 0; i < k; ++i) {
    ThresholdSegment seg;
    seg.index = i;
    seg.g = i <= K ? Rational(tau * g1(i)) : Rational(tau * g1(K) + g2(i - K));
    seg.beta_lo = i < K ? f1(i) : f2(i);
    // Coefficient implied by the knee: M/f = L(k-i) + g.
    seg.coeff = (M / *seg.beta_lo - seg.g) / (k - i);
    closed.L.values.push_back(seg.coeff);
    closed.all.push_back(seg);
  }
  settle_bounds(closed.all);

  const auto exposed_closed = closed.segments();
  const auto exposed_generic = out.generic.segments();
  if (exposed_closed.size() != exposed_generic.size()) {
    out.discrepancies.push_back("exposed knee count: closed form " +
                                std::to_string(exposed_closed.size()) + ", engine " +
                                std::to_string(exposed_generic.size()));
  }
  for (const auto& seg : closed.all) {
    if (seg.index >= static_cast<int>(out.generic.all.size())) {
      out.discrepancies.push_back("segment " + std::to_string(seg.index) +
                                  " missing from engine curve");
      continue;
    }
    const auto& ref = out.generic.all[seg.index];
    if (seg.empty != ref.empty || (!seg.empty && *seg.beta_lo != *ref.beta_lo)) {
      out.discrepancies.push_back("knee " + std::to_string(seg.index) + ": closed form " +
                                  (seg.empty ? "empty" : show(seg.beta_lo)) + ", engine " +
                                  (ref.empty ? "empty" : show(ref.beta_lo)));
    } else if (!seg.empty && seg.g != ref.g) {
      out.discrepancies.push_back("slope " + std::to_string(seg.index) + ": closed form g = " +
                                  to_string(seg.g) + ", engine g = " + to_string(ref.g));
    }
  }
  return out;
}

Rational analytic_mincut(const CoeffList& L, const Rational& bound, const Rational& alpha,
                         const Rational& beta_e) {
  Rational total = 0;
  for (const auto& c : L.values) total += rmin(c * beta_e, alpha);
  total += (L.k - L.size()) * rmin(bound * beta_e, alpha);
  return total;
}

}  // namespace rackregen
