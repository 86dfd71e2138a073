#pragma once

#include <set>
#include <string>
#include <vector>

#include "rackregen/config.hpp"
#include "rackregen/rational.hpp"

namespace rackregen {

// Income of one newcomer, as a multiple of beta_e.
struct IncomeTerm {
  Rational coeff;
  int rack = 0;     // 0-based rack index
  int ordinal = 0;  // position in construction order
};

// Ordered multiset of newcomer incomes. Within each contiguous same-rack run
// the coefficients are nonincreasing.
struct IncomeSequence {
  std::vector<IncomeTerm> terms;
  std::string origin;

  size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
  Rational sum() const;
  std::vector<Rational> coeffs() const;

  void append(const Rational& coeff, int rack);
  void append(const IncomeSequence& other);
  // Keeps the first `count` terms.
  void truncate(size_t count);
};

// The three building blocks of the two-rack minimum mincut set.
struct TwoRackComponents {
  // First min(d_c1, k-1)+1 newcomers of rack 1.
  IncomeSequence leading;
  // Remaining rack-1 newcomers followed by rack-2 newcomers.
  IncomeSequence first_rack_rest;
  // Rack-2 newcomers only.
  IncomeSequence second_rack_only;
};

TwoRackComponents two_rack_components(const SystemConfig& cfg);

// Leading block, completed with whichever of the two alternatives has the
// strictly smaller sum (ties go to the rack-2-only block). Length is k.
IncomeSequence two_rack_min_incomes(const SystemConfig& cfg);

// Incomes of all n newcomers for any number of racks.
struct IncomePool {
  IncomeSequence pool;
  // First d_c^j + 1 newcomers of each rack.
  std::vector<IncomeSequence> main_blocks;
  // Remaining n_j - d_c^j - 1 newcomers of each rack.
  std::vector<IncomeSequence> rest_blocks;
  // Number of involved racks.
  int involved = 0;
};

IncomePool general_income_pool(const SystemConfig& cfg);

// `included` holds 1-based rack indices j < s whose rest block joins the
// candidate. Throws IndexError otherwise.
IncomeSequence candidate_sequence(const SystemConfig& cfg, const std::set<int>& included);
IncomeSequence candidate_sequence(const IncomePool& pool, int k, const std::set<int>& included);

enum class SelectionMode { greedy, exhaustive };

struct CandidateAudit {
  std::vector<int> included;  // ascending, 1-based
  Rational sum;
};

struct MinMincutResult {
  IncomeSequence incomes;
  std::vector<int> included;
  std::vector<CandidateAudit> audit;
};

MinMincutResult min_mincut_incomes(const SystemConfig& cfg, SelectionMode mode);

// Ascending income coefficients the threshold function is built from.
struct CoeffList {
  std::vector<Rational> values;
  int k = 0;
  // Coefficients dropped by feasibility trimming, ascending.
  std::vector<Rational> removed;

  int size() const { return static_cast<int>(values.size()); }
  const Rational& max() const { return values.back(); }
};

// d_c1 * tau + d_e1: income of the very first newcomer, which is also the
// largest income compatible with gamma1 >= alpha.
Rational trim_bound(const SystemConfig& cfg);

CoeffList feasibility_trim(const IncomeSequence& incomes, const SystemConfig& cfg);

// Minimum mincut incomes of the rack model: the two-rack rule for r = 2,
// the greedy candidate search otherwise.
IncomeSequence rack_model_incomes(const SystemConfig& cfg);
CoeffList rack_model_coeffs(const SystemConfig& cfg);

}  // namespace rackregen
