#include "rackregen/emit.hpp"

#include <sstream>

#include "rackregen/errors.hpp"

namespace rackregen {

using nlohmann::json;

Model parse_model(const std::string& name) {
  if (name == "rack") return Model::rack;
  if (name == "static") return Model::static_cost;
  if (name == "basic") return Model::basic;
  throw InvalidConfig("unknown model '" + name + "' (expected rack, static or basic)");
}

std::string model_name(Model model) {
  switch (model) {
    case Model::rack: return "rack";
    case Model::static_cost: return "static";
    case Model::basic: return "basic";
  }
  return "?";
}

ThresholdCurve model_curve(const SystemConfig& cfg, Model model) {
  switch (model) {
    case Model::rack: return rack_curve(cfg);
    case Model::static_cost: return reference_curve(static_model_of(cfg), cfg.file_size);
    case Model::basic: return reference_curve(basic_model_of(cfg), cfg.file_size);
  }
  throw InvalidConfig("unknown model");
}

TradeoffPoint model_metrics(const SystemConfig& cfg, Model model, const Rational& beta_e) {
  if (model == Model::rack) return repair_metrics(cfg, beta_e);
  TradeoffPoint p;
  p.beta_e = beta_e;
  const int dc = cfg.cheap_degree(0);
  const int de = cfg.expensive_degree(0);
  if (model == Model::static_cost) {
    p.gamma.push_back((dc * cfg.tau + de) * beta_e);
    p.cost.push_back(beta_e * (cfg.cheap_cost * dc * cfg.tau + cfg.expensive_cost * de));
  } else {
    // Every helper sends beta; only the price differs between the links.
    p.gamma.push_back(cfg.d * beta_e);
    p.cost.push_back(beta_e * (cfg.cheap_cost * dc + cfg.expensive_cost * de));
  }
  return p;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<Table::Column> metric_columns(size_t count) {
  std::vector<Table::Column> cols;
  for (size_t j = 1; j <= count; ++j) cols.push_back({"gamma_" + std::to_string(j), true});
  for (size_t j = 1; j <= count; ++j) cols.push_back({"cost_" + std::to_string(j), true});
  return cols;
}

void append_metrics(std::vector<Cell>& row, const TradeoffPoint& p) {
  for (const auto& g : p.gamma) row.push_back(Cell::of(g));
  for (const auto& c : p.cost) row.push_back(Cell::of(c));
}

size_t metric_count(const SystemConfig& cfg, Model model) {
  return model == Model::rack ? static_cast<size_t>(cfg.rack_count()) : 1;
}

Cell beta_cell(const std::optional<Rational>& v) { return v ? Cell::of(*v) : Cell::inf(); }

}  // namespace

std::string Table::to_csv() const {
  std::ostringstream out;
  for (size_t c = 0; c < columns.size(); ++c) {
    if (c) out << ',';
    out << columns[c].name;
    if (columns[c].with_decimal) out << ',' << columns[c].name << "_dec";
  }
  out << '\n';
  for (const auto& row : rows) {
    for (size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      const Cell& cell = row[c];
      switch (cell.kind) {
        case Cell::Kind::rational: out << to_string(cell.value); break;
        case Cell::Kind::integer: out << cell.integer; break;
        case Cell::Kind::text: out << csv_escape(cell.text); break;
        case Cell::Kind::infinite: out << "inf"; break;
      }
      if (columns[c].with_decimal) {
        out << ',';
        if (cell.kind == Cell::Kind::rational) out << to_decimal(cell.value);
        if (cell.kind == Cell::Kind::infinite) out << "inf";
      }
    }
    out << '\n';
  }
  return out.str();
}

json Table::to_json() const {
  json rows_out = json::array();
  for (const auto& row : rows) {
    json obj = json::object();
    for (size_t c = 0; c < columns.size(); ++c) {
      const Cell& cell = row[c];
      const std::string& name = columns[c].name;
      switch (cell.kind) {
        case Cell::Kind::rational: obj[name] = to_string(cell.value); break;
        case Cell::Kind::integer: obj[name] = cell.integer; break;
        case Cell::Kind::text: obj[name] = cell.text; break;
        case Cell::Kind::infinite: obj[name] = "inf"; break;
      }
      if (columns[c].with_decimal) {
        obj[name + "_dec"] = cell.kind == Cell::Kind::rational
                                 ? json(std::stod(to_decimal(cell.value)))
                                 : json(nullptr);
      }
    }
    rows_out.push_back(std::move(obj));
  }
  return rows_out;
}

Table knee_table(const SystemConfig& cfg, Model model) {
  const ThresholdCurve curve = model_curve(cfg, model);
  Table t;
  t.columns = {{"knee_index"}, {"L_i"}, {"beta_e", true}, {"alpha", true}};
  for (auto& c : metric_columns(metric_count(cfg, model))) t.columns.push_back(c);
  long long index = 0;
  for (const auto& seg : curve.segments()) {
    const Rational& beta = *seg.beta_lo;
    std::vector<Cell> row{Cell::of_int(index++), Cell::of(seg.coeff), Cell::of(beta),
                          Cell::of(seg.alpha_at(curve.M, curve.k, beta))};
    append_metrics(row, model_metrics(cfg, model, beta));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table segment_table(const ThresholdCurve& curve) {
  Table t;
  t.columns = {{"segment_index"}, {"i"},       {"L_i"},      {"g_i"},
               {"beta_lo"},       {"beta_hi"}, {"alpha_lo"}, {"alpha_hi"}};
  long long index = 0;
  for (const auto& seg : curve.segments()) {
    const Rational alpha_lo = seg.alpha_at(curve.M, curve.k, *seg.beta_lo);
    const Rational alpha_hi =
        seg.beta_hi ? seg.alpha_at(curve.M, curve.k, *seg.beta_hi) : Rational(curve.M / curve.k);
    t.rows.push_back({Cell::of_int(index++), Cell::of_int(seg.index), Cell::of(seg.coeff),
                      Cell::of(seg.g), Cell::of(*seg.beta_lo), beta_cell(seg.beta_hi),
                      Cell::of(alpha_lo), Cell::of(alpha_hi)});
  }
  return t;
}

Table points_table(const SystemConfig& cfg, Model model) {
  const ThresholdCurve curve = model_curve(cfg, model);
  Table t;
  t.columns = {{"point"}, {"beta_e", true}, {"alpha", true}};
  for (auto& c : metric_columns(metric_count(cfg, model))) t.columns.push_back(c);
  const auto& first = curve.msr_segment();
  const auto& last = curve.mbr_segment();
  const std::pair<const char*, const ThresholdSegment*> points[] = {{"msr", &first},
                                                                    {"mbr", &last}};
  for (const auto& [name, seg] : points) {
    const Rational& beta = *seg->beta_lo;
    std::vector<Cell> row{Cell::of_text(name), Cell::of(beta),
                          Cell::of(seg->alpha_at(curve.M, curve.k, beta))};
    append_metrics(row, model_metrics(cfg, model, beta));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Comparison compare_models(const SystemConfig& cfg, const std::vector<Model>& models) {
  Comparison out;
  out.table.columns = {{"model"}, {"i"}, {"L_i"}, {"beta_e", true}, {"alpha", true}, {"exposed"}};
  std::optional<ThresholdCurve> rack;
  std::optional<ThresholdCurve> stat;
  for (Model m : models) {
    ThresholdCurve curve = model_curve(cfg, m);
    for (const auto& seg : curve.all) {
      Cell alpha = seg.beta_lo ? Cell::of(seg.alpha_at(curve.M, curve.k, *seg.beta_lo))
                               : Cell::of(curve.M / curve.k);
      out.table.rows.push_back({Cell::of_text(model_name(m)), Cell::of_int(seg.index),
                                Cell::of(seg.coeff), beta_cell(seg.beta_lo), alpha,
                                Cell::of_int(seg.empty ? 0 : 1)});
    }
    if (m == Model::rack) rack = std::move(curve);
    if (m == Model::static_cost) stat = std::move(curve);
  }
  if (rack && stat && cfg.tau > 1 && cfg.k > cfg.cheap_degree(0) + 1) {
    out.dominance_checked = true;
    const size_t m = std::min(rack->all.size(), stat->all.size());
    for (size_t i = 0; i < m; ++i) {
      const auto& r = rack->all[i].beta_lo;
      const auto& s = stat->all[i].beta_lo;
      // An unset knee is at infinity.
      const bool ok = !s || (r && *r <= *s);
      if (!ok) {
        out.dominance_violations.push_back(
            "index " + std::to_string(i) + ": rack beta_e " + (r ? to_string(*r) : "inf") +
            " exceeds static beta_e " + to_string(*s));
      }
    }
  }
  return out;
}

Table sweep_table(const SystemConfig& cfg, Model model, const std::vector<Rational>& taus) {
  Table t;
  bool first = true;
  for (const auto& tau : taus) {
    const SystemConfig swept = with_tau(cfg, tau);
    Table block = knee_table(swept, model);
    if (first) {
      t.columns.push_back({"tau", true});
      for (auto& c : block.columns) t.columns.push_back(c);
      first = false;
    }
    for (auto& row : block.rows) {
      row.insert(row.begin(), Cell::of(tau));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

std::string verification_text(const SystemConfig& cfg, const SampleSpec& spec,
                              const VerificationReport& report) {
  std::ostringstream out;
  out << "mode: " << (spec.mode == OracleMode::structured ? "structured" : "exhaustive") << '\n';
  out << "racks: " << cfg.rack_count() << ", n = " << cfg.total_nodes() << ", k = " << cfg.k
      << ", d = " << cfg.d << ", tau = " << to_string(cfg.tau) << '\n';
  if (spec.inflate_coeff) out << "inflated coefficient: " << *spec.inflate_coeff << '\n';
  out << "candidate audit: greedy sum " << to_string(report.greedy.incomes.sum())
      << ", exhaustive sum " << to_string(report.exhaustive.incomes.sum()) << ", model sum "
      << to_string(report.model_sum) << (report.audit_agrees() ? " (agree)" : " (DISAGREE)")
      << '\n';
  out << "label,beta_e,alpha,analytic,oracle,status\n";
  for (const auto& s : report.samples) {
    out << s.point.label << ',' << to_string(s.point.beta_e) << ',' << to_string(s.point.alpha)
        << ',' << to_string(s.analytic) << ',' << to_string(s.oracle) << ','
        << (s.matches() ? "ok" : "MISMATCH") << '\n';
  }
  for (size_t i : report.mismatches) {
    const auto& s = report.samples[i];
    out << "mismatch at beta_e = " << to_string(s.point.beta_e)
        << ", alpha = " << to_string(s.point.alpha) << ": witness " << s.witness.describe()
        << '\n';
  }
  out << "samples: " << report.samples.size() << '\n';
  out << "mismatches: " << report.mismatches.size() << '\n';
  return out.str();
}

json verification_json(const SampleSpec& spec, const VerificationReport& report) {
  json samples = json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"label", s.point.label},
                       {"beta_e", to_string(s.point.beta_e)},
                       {"alpha", to_string(s.point.alpha)},
                       {"analytic", to_string(s.analytic)},
                       {"oracle", to_string(s.oracle)},
                       {"match", s.matches()},
                       {"witness", s.witness.describe()}});
  }
  auto audit = [](const MinMincutResult& r) {
    json entries = json::array();
    for (const auto& a : r.audit) entries.push_back({{"included", a.included}, {"sum", to_string(a.sum)}});
    return json{{"included", r.included}, {"sum", to_string(r.incomes.sum())}, {"examined", entries}};
  };
  return {{"mode", spec.mode == OracleMode::structured ? "structured" : "exhaustive"},
          {"seed", spec.seed},
          {"samples", samples},
          {"mismatches", report.mismatches.size()},
          {"greedy", audit(report.greedy)},
          {"exhaustive", audit(report.exhaustive)},
          {"audit_agrees", report.audit_agrees()}};
}

}  // namespace rackregen
