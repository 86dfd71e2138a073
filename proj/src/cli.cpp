#include "rackregen/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "rackregen/config.hpp"
#include "rackregen/emit.hpp"
#include "rackregen/errors.hpp"
#include "rackregen/verify.hpp"

namespace rackregen {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::string model = "rack";
  std::vector<std::string> models{"rack", "static"};
  std::string format = "csv";
  std::string report_format = "text";
  std::string table = "knees";
  std::string out;
  std::vector<std::string> taus;
  int samples = 20;
  std::uint64_t seed = 1;
  std::string mode = "structured";
  std::optional<int> inflate;
};

void add_common(CLI::App* cmd, Options& o, std::string& format,
                std::vector<std::string> formats) {
  cmd->add_option("--config", o.config, "JSON cluster description")->required();
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
}

std::string render(const Table& table, const std::string& format, json meta,
                   const std::string& key) {
  if (format == "csv") return table.to_csv();
  meta[key] = table.to_json();
  return meta.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Storage/repair-bandwidth tradeoff curves for rack-aware regenerating codes",
               "rackregen"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> models{"rack", "static", "basic"};

  auto* curve = app.add_subcommand("curve", "Knees or segments of the threshold function");
  add_common(curve, o, o.format, {"csv", "json"});
  curve->add_option("--model", o.model)->check(CLI::IsMember(models));
  curve->add_option("--table", o.table, "knees or segments")
      ->check(CLI::IsMember({"knees", "segments"}));

  auto* points = app.add_subcommand("points", "MSR and MBR points");
  add_common(points, o, o.format, {"csv", "json"});
  points->add_option("--model", o.model)->check(CLI::IsMember(models));

  auto* compare = app.add_subcommand("compare", "Several models side by side");
  add_common(compare, o, o.format, {"csv", "json"});
  compare->add_option("--models", o.models)->delimiter(',')->check(CLI::IsMember(models));

  auto* sweep = app.add_subcommand("sweep", "Knees for several values of tau");
  add_common(sweep, o, o.format, {"csv", "json"});
  sweep->add_option("--model", o.model)->check(CLI::IsMember(models));
  sweep->add_option("--tau", o.taus, "Comma separated tau values, e.g. 1,6/5,2")
      ->delimiter(',')
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check the curve against the flow-graph oracle");
  add_common(verify_cmd, o, o.report_format, {"text", "json"});
  verify_cmd->add_option("--samples", o.samples, "Random samples on top of knees and midpoints")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"structured", "exhaustive"}));
  verify_cmd->add_option("--inflate-coeff", o.inflate,
                         "Add 1 to this coefficient before comparing (negative control)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rackregen: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string text;
  int status = kExitOk;
  try {
    const SystemConfig cfg = load_config(o.config);
    const json meta{{"config", config_to_json(cfg)}};
    if (curve->parsed()) {
      const Model model = parse_model(o.model);
      json m = meta;
      m["model"] = o.model;
      if (o.table == "segments") {
        text = render(segment_table(model_curve(cfg, model)), o.format, m, "segments");
      } else {
        text = render(knee_table(cfg, model), o.format, m, "knees");
      }
    } else if (points->parsed()) {
      json m = meta;
      m["model"] = o.model;
      text = render(points_table(cfg, parse_model(o.model)), o.format, m, "points");
    } else if (compare->parsed()) {
      std::vector<Model> chosen;
      for (const auto& name : o.models) chosen.push_back(parse_model(name));
      const Comparison cmp = compare_models(cfg, chosen);
      json m = meta;
      m["dominance_checked"] = cmp.dominance_checked;
      m["dominance_violations"] = cmp.dominance_violations;
      text = render(cmp.table, o.format, m, "rows");
      for (const auto& v : cmp.dominance_violations) err << "dominance violated at " << v << "\n";
      if (!cmp.dominance_violations.empty()) status = kExitMismatch;
    } else if (sweep->parsed()) {
      std::vector<Rational> taus;
      for (const auto& t : o.taus) {
        try {
          taus.push_back(parse_rational(t));
        } catch (const std::invalid_argument&) {
          throw InvalidConfig("tau value '" + t + "' is not a rational");
        }
      }
      json m = meta;
      m["model"] = o.model;
      text = render(sweep_table(cfg, parse_model(o.model), taus), o.format, m, "knees");
    } else if (verify_cmd->parsed()) {
      SampleSpec spec;
      spec.count = o.samples;
      spec.seed = o.seed;
      spec.mode = o.mode == "exhaustive" ? OracleMode::exhaustive : OracleMode::structured;
      spec.inflate_coeff = o.inflate;
      const VerificationReport report = verify(cfg, spec);
      text = o.report_format == "json" ? verification_json(spec, report).dump(2) + "\n"
                                : verification_text(cfg, spec, report);
      if (!report.passed()) status = kExitMismatch;
    }
  } catch (const Error& e) {
    err << "rackregen: " << e.what() << "\n";
    return kExitConfig;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "rackregen: cannot write " << o.out << "\n";
      return kExitConfig;
    }
  }
  return status;
}

}  // namespace rackregen
