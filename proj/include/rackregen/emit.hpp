#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rackregen/config.hpp"
#include "rackregen/threshold.hpp"
#include "rackregen/verify.hpp"

namespace rackregen {

enum class Model { rack, static_cost, basic };

Model parse_model(const std::string& name);
std::string model_name(Model model);

ThresholdCurve model_curve(const SystemConfig& cfg, Model model);

// gamma and cost at beta_e under the given model. The rack model reports one
// value per rack; the others report a single value.
TradeoffPoint model_metrics(const SystemConfig& cfg, Model model, const Rational& beta_e);

// A cell is an exact rational (emitted with a decimal twin column), an
// integer, a plain string, or an infinite rational.
struct Cell {
  enum class Kind { rational, integer, text, infinite } kind = Kind::text;
  Rational value;
  long long integer = 0;
  std::string text;

  static Cell of(const Rational& v) { return {Kind::rational, v, 0, {}}; }
  static Cell of_int(long long v) { return {Kind::integer, 0, v, {}}; }
  static Cell of_text(std::string s) { return {Kind::text, 0, 0, std::move(s)}; }
  static Cell inf() { return {Kind::infinite, 0, 0, {}}; }
};

// Columns flagged as rational get a `<name>_dec` twin in CSV and JSON.
struct Table {
  struct Column {
    std::string name;
    bool with_decimal = false;
  };
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

Table knee_table(const SystemConfig& cfg, Model model);
Table segment_table(const ThresholdCurve& curve);
Table points_table(const SystemConfig& cfg, Model model);

struct Comparison {
  Table table;
  // Empty when every rack knee sits at or left of the static knee.
  std::vector<std::string> dominance_violations;
  bool dominance_checked = false;
};

Comparison compare_models(const SystemConfig& cfg, const std::vector<Model>& models);

// Knee tables for each tau, with a leading tau column.
Table sweep_table(const SystemConfig& cfg, Model model, const std::vector<Rational>& taus);

std::string verification_text(const SystemConfig& cfg, const SampleSpec& spec,
                              const VerificationReport& report);
nlohmann::json verification_json(const SampleSpec& spec, const VerificationReport& report);

}  // namespace rackregen
