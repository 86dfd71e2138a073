#include "rackregen/incomes.hpp"

#include <algorithm>
#include <numeric>

#include "rackregen/errors.hpp"

namespace rackregen {

namespace {

Rational clamp_zero(const Rational& x) { return x < 0 ? Rational(0) : x; }

void require_two_racks(const SystemConfig& cfg) {
  if (cfg.rack_count() != 2) {
    throw NotTwoRack("expected exactly 2 racks, got " + std::to_string(cfg.rack_count()));
  }
}

// Cross-rack part of an income: expensive helpers that cannot be drawn from
// the `replaced_elsewhere` newcomers already placed in other racks.
Rational cross_income(int expensive_degree, int replaced_elsewhere) {
  return Rational(std::max(0, expensive_degree - replaced_elsewhere));
}

std::string subset_tag(const std::set<int>& included) {
  std::string tag = "candidate{";
  bool first = true;
  for (int j : included) {
    if (!first) tag += ",";
    tag += std::to_string(j);
    first = false;
  }
  return tag + "}";
}

}  // namespace

Rational IncomeSequence::sum() const {
  Rational total = 0;
  for (const auto& t : terms) total += t.coeff;
  return total;
}

std::vector<Rational> IncomeSequence::coeffs() const {
  std::vector<Rational> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.coeff);
  return out;
}

void IncomeSequence::append(const Rational& coeff, int rack) {
  terms.push_back({coeff, rack, static_cast<int>(terms.size())});
}

void IncomeSequence::append(const IncomeSequence& other) {
  for (const auto& t : other.terms) append(t.coeff, t.rack);
}

void IncomeSequence::truncate(size_t count) {
  if (terms.size() > count) terms.resize(count);
}

TwoRackComponents two_rack_components(const SystemConfig& cfg) {
  require_two_racks(cfg);
  const int k = cfg.k;
  const int n1 = cfg.racks[0].nodes;
  const int dc1 = cfg.cheap_degree(0);
  const int dc2 = cfg.cheap_degree(1);
  const int de1 = cfg.expensive_degree(0);
  const int de2 = cfg.expensive_degree(1);
  const Rational& tau = cfg.tau;

  TwoRackComponents out;
  out.leading.origin = "I1";
  out.first_rack_rest.origin = "I2";
  out.second_rack_only.origin = "I3";

  for (int i = 0; i <= std::min(dc1, k - 1); ++i) {
    out.leading.append(Rational((dc1 - i) * tau + de1), 0);
  }
  const int tail = k - dc1 - 1;
  if (tail <= 0) return out;

  // Rest of rack 1, then rack 2 once rack 1 is fully replaced.
  const int rest1 = std::min(tail, n1 - dc1 - 1);
  for (int i = 0; i < rest1; ++i) out.first_rack_rest.append(Rational(de1), 0);
  const Rational after_rack1 = cross_income(de2, n1);
  for (int i = 0; i <= std::min(dc2, k - n1 - 1); ++i) {
    out.first_rack_rest.append(Rational((dc2 - i) * tau + after_rack1), 1);
  }
  while (static_cast<int>(out.first_rack_rest.size()) < tail) {
    out.first_rack_rest.append(after_rack1, 1);
  }

  // Rack 2 right after the leading block of rack 1.
  const Rational after_leading = cross_income(de2, dc1 + 1);
  for (int i = 0; i <= std::min(dc2, tail - 1); ++i) {
    out.second_rack_only.append(Rational((dc2 - i) * tau + after_leading), 1);
  }
  while (static_cast<int>(out.second_rack_only.size()) < tail) {
    out.second_rack_only.append(after_leading, 1);
  }
  return out;
}

IncomeSequence two_rack_min_incomes(const SystemConfig& cfg) {
  TwoRackComponents parts = two_rack_components(cfg);
  IncomeSequence result = parts.leading;
  if (cfg.k <= cfg.cheap_degree(0) + 1) {
    result.truncate(static_cast<size_t>(cfg.k));
    return result;
  }
  if (parts.first_rack_rest.sum() < parts.second_rack_only.sum()) {
    result.append(parts.first_rack_rest);
    result.origin = "I1+I2";
  } else {
    result.append(parts.second_rack_only);
    result.origin = "I1+I3";
  }
  return result;
}

IncomePool general_income_pool(const SystemConfig& cfg) {
  IncomePool out;
  out.pool.origin = "pool";
  int replaced_before = 0;  // sum over earlier racks of (d_c^z + 1)
  for (int j = 0; j < cfg.rack_count(); ++j) {
    const int dc = cfg.cheap_degree(j);
    const Rational cross = cross_income(cfg.expensive_degree(j), replaced_before);
    IncomeSequence main;
    IncomeSequence rest;
    main.origin = "main" + std::to_string(j + 1);
    rest.origin = "I^" + std::to_string(j + 1);
    for (int i = 0; i <= dc; ++i) main.append(clamp_zero((dc - i) * cfg.tau + cross), j);
    for (int i = 0; i < cfg.racks[j].nodes - dc - 1; ++i) rest.append(clamp_zero(cross), j);
    out.pool.append(main);
    out.pool.append(rest);
    out.main_blocks.push_back(std::move(main));
    out.rest_blocks.push_back(std::move(rest));
    replaced_before += dc + 1;
  }

  int covered = 0;
  out.involved = cfg.rack_count();
  for (int j = 0; j < cfg.rack_count(); ++j) {
    covered += cfg.cheap_degree(j) + 1;
    if (covered >= cfg.k) {
      out.involved = j + 1;
      break;
    }
  }
  return out;
}

IncomeSequence candidate_sequence(const IncomePool& pool, int k, const std::set<int>& included) {
  const int s = pool.involved;
  for (int j : included) {
    if (j < 1 || j >= s) {
      throw IndexError("rack " + std::to_string(j) + " is not in 1.." + std::to_string(s - 1));
    }
  }
  IncomeSequence out;
  out.origin = subset_tag(included);
  for (int j = 0; j < s; ++j) {
    out.append(pool.main_blocks[j]);
    if (included.count(j + 1)) out.append(pool.rest_blocks[j]);
  }
  // Only reachable when every rack is involved and the leading blocks alone
  // hold fewer than k newcomers.
  if (static_cast<int>(out.size()) < k) {
    out.append(pool.rest_blocks[s - 1]);
    for (int j = 0; j + 1 < s; ++j) {
      if (!included.count(j + 1)) out.append(pool.rest_blocks[j]);
    }
  }
  out.truncate(static_cast<size_t>(k));
  return out;
}

IncomeSequence candidate_sequence(const SystemConfig& cfg, const std::set<int>& included) {
  return candidate_sequence(general_income_pool(cfg), cfg.k, included);
}

MinMincutResult min_mincut_incomes(const SystemConfig& cfg, SelectionMode mode) {
  const IncomePool pool = general_income_pool(cfg);
  const int s = pool.involved;
  MinMincutResult result;

  auto record = [&](const std::set<int>& subset, const Rational& sum) {
    result.audit.push_back({std::vector<int>(subset.begin(), subset.end()), sum});
  };

  std::set<int> best;
  if (mode == SelectionMode::greedy) {
    for (int j = 1; j < s; ++j) best.insert(j);
    Rational best_sum = candidate_sequence(pool, cfg.k, best).sum();
    record(best, best_sum);
    for (int j = 1; j < s; ++j) {
      std::set<int> trial = best;
      trial.erase(j);
      Rational trial_sum = candidate_sequence(pool, cfg.k, trial).sum();
      record(trial, trial_sum);
      if (trial_sum < best_sum) {
        best = std::move(trial);
        best_sum = trial_sum;
      }
    }
  } else {
    std::vector<int> best_vec;
    Rational best_sum;
    bool have = false;
    for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
      std::set<int> subset;
      for (int j = 1; j < s; ++j) {
        if (mask & (1u << (j - 1))) subset.insert(j);
      }
      Rational sum = candidate_sequence(pool, cfg.k, subset).sum();
      record(subset, sum);
      std::vector<int> vec(subset.begin(), subset.end());
      bool better = !have || sum < best_sum ||
                    (sum == best_sum && (vec.size() < best_vec.size() ||
                                         (vec.size() == best_vec.size() && vec < best_vec)));
      if (better) {
        have = true;
        best_sum = sum;
        best_vec = vec;
        best = subset;
      }
    }
  }
  result.incomes = candidate_sequence(pool, cfg.k, best);
  result.included.assign(best.begin(), best.end());
  return result;
}

Rational trim_bound(const SystemConfig& cfg) {
  return cfg.cheap_degree(0) * cfg.tau + cfg.expensive_degree(0);
}

CoeffList feasibility_trim(const IncomeSequence& incomes, const SystemConfig& cfg) {
  if (incomes.empty()) throw EmptyIncome("income sequence is empty");
  const Rational bound = trim_bound(cfg);
  CoeffList out;
  out.k = cfg.k;
  for (const auto& t : incomes.terms) {
    (t.coeff > bound ? out.removed : out.values).push_back(t.coeff);
  }
  if (out.values.empty()) throw EmptyIncome("every income exceeds the feasibility bound");
  std::sort(out.values.begin(), out.values.end());
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

IncomeSequence rack_model_incomes(const SystemConfig& cfg) {
  if (cfg.rack_count() == 2) return two_rack_min_incomes(cfg);
  return min_mincut_incomes(cfg, SelectionMode::greedy).incomes;
}

CoeffList rack_model_coeffs(const SystemConfig& cfg) {
  return feasibility_trim(rack_model_incomes(cfg), cfg);
}

}  // namespace rackregen
