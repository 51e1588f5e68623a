#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "schattenlab/diagnostics.hpp"
#include "schattenlab/parallel.hpp"
#include "schattenlab/report.hpp"
#include "schattenlab/scenario.hpp"

namespace fs = std::filesystem;
using namespace schattenlab;

namespace {

constexpr int kExitScenario = 2;
constexpr int kExitConfig = 3;

struct Common {
  std::string config;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::size_t resolution = 0;
};

std::ofstream open_out(const fs::path& p, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(p, mode);
  if (!out) throw ScenarioError("cannot write " + p.string());
  return out;
}

int cmd_run(const Common& c) {
  const auto cfg = load_config(c.config, c.seed);
  fs::create_directories(c.out_dir);
  std::vector<ProfileRecord> profiles;
  const auto report = run_scenario(cfg, cfg.write_profiles ? &profiles : nullptr);
  {
    auto out = open_out(fs::path(c.out_dir) / "report.csv");
    write_report_csv(out, report);
  }
  {
    auto out = open_out(fs::path(c.out_dir) / "report.json");
    out << report_to_json(report, cfg).dump(2) << '\n';
  }
  if (cfg.write_profiles) {
    const auto dir = fs::path(c.out_dir) / "profiles";
    fs::create_directories(dir);
    for (const auto& p : profiles) {
      auto out = open_out(dir / ("sv_" + p.function + "_" + p.resolution + ".csv"));
      write_profile_csv(out, p.values);
    }
  }
  for (const auto& s : report.ratios)
    std::printf("ratio %s / %s: min %.6g max %.6g band %.6g\n", s.numerator.c_str(), s.denominator.c_str(), s.min,
                s.max, s.band);
  if (report.failed) {
    for (const auto& r : report.rows)
      if (r.status == "error") std::fprintf(stderr, "error [%s %s]: %s\n", r.function.c_str(), r.resolution.c_str(),
                                            r.message.c_str());
    return kExitScenario;
  }
  std::printf("%zu rows written to %s\n", report.rows.size(), c.out_dir.c_str());
  return 0;
}

int cmd_diagnose(const Common& c) {
  const auto cfg = load_config(c.config, c.seed);
  if (c.resolution >= cfg.space.resolutions.size()) throw ConfigError("resolution index out of range");
  const auto space = build_space(cfg, c.resolution);
  const auto dc = cfg.diagnostics_given ? cfg.diagnostics : default_diagnostics(space);
  try {
    dc.validate(space);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("diagnostics: ") + e.what());
  }

  std::vector<DiagnosticsRow> rows;
  auto add = [&](const std::string& name, const std::string& m, const std::vector<DiagnosticSample>& s) {
    for (const auto& x : s) rows.push_back({name, m, x});
  };
  try {
    for (Measure m : {Measure::mu, Measure::nu}) {
      const std::string ms = to_string(m);
      const auto dbl = doubling_constant(space, m, dc);
      add("doubling", ms, dbl.samples);
      const auto dim = dimension_bounds(space, m, dc);
      add("dimension", ms, dim.samples);
      std::printf("%s: doubling %.6g, dimension [%.4g, %.4g]\n", ms.c_str(), dbl.value, dim.lower, dim.upper);
    }
    const auto sep = separation_exponent(space, dc);
    add("separation", "", sep.samples);
    const auto rh = reverse_holder(space, dc, 2.0);
    add("reverse_holder_t2", "mu", rh.samples);
    const auto ai = check_ainfty(space, 0.5, dc);
    add("ainfty_eps0.5", "mu", ai.samples);
    std::printf("separation %.4g, reverse Hoelder(t=2) %.6g, A_inf delta(eps=0.5) %.6g%s\n", sep.value, rh.value,
                ai.value, ai.flagged ? " [flagged]" : "");
    if (cfg.op.weight) {
      const auto a2 = a2_constant(space, *cfg.op.weight, dc);
      add("a2", "mu", a2.samples);
      std::printf("A_2 constant %.6g\n", a2.value);
    }
  } catch (const std::exception& e) {
    throw ScenarioError(e.what());
  }
  fs::create_directories(c.out_dir);
  auto out = open_out(fs::path(c.out_dir) / "diagnostics.csv");
  write_diagnostics_csv(out, rows);
  return 0;
}

int cmd_export(const Common& c, const std::string& format, const std::string& function) {
  const auto cfg = load_config(c.config, c.seed);
  if (c.resolution >= cfg.space.resolutions.size()) throw ConfigError("resolution index out of range");
  if (cfg.op.kind == OperatorConfig::Kind::none) throw ConfigError("config has no operator");
  const auto space = build_space(cfg, c.resolution);
  OperatorMatrix T;
  try {
    T = build_operator(cfg, space);
    if (!function.empty()) {
      auto it = std::find_if(cfg.functions.begin(), cfg.functions.end(),
                             [&](const FunctionSpec& f) { return f.id == function; });
      if (it == cfg.functions.end()) throw ConfigError("unknown function id '" + function + "'");
      T = build_commutator(cfg, space, sample(space, *it), T);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(e.what());
  }
  fs::create_directories(c.out_dir);
  if (format == "csv") {
    auto out = open_out(fs::path(c.out_dir) / "operator.csv");
    write_operator_csv(out, T);
  } else {
    auto out = open_out(fs::path(c.out_dir) / "operator.bin", std::ios::out | std::ios::binary);
    write_operator_binary(out, T);
  }
  std::printf("exported %zu x %zu operator (%s)\n", T.size(), T.size(), format.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schatten-class commutator and oscillation norm experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Common c;
  std::uint64_t seed = 0;
  app.add_option("--config", c.config, "Scenario config (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--out-dir", c.out_dir, "Output directory");
  auto* seed_opt = app.add_option("--seed", seed, "Override the config seed");
  app.add_option("--threads", c.threads, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);

  auto* run = app.add_subcommand("run", "Evaluate the configured quantities and write report.csv/report.json");
  auto* diag = app.add_subcommand("diagnose", "Space diagnostics only; writes diagnostics.csv");
  diag->add_option("--resolution-index", c.resolution, "Which configured resolution to use");
  auto* exp = app.add_subcommand("export-operator", "Write the operator (or a commutator) to disk");
  std::string format = "csv", function;
  exp->add_option("--format", format, "csv or binary")->check(CLI::IsMember({"csv", "binary"}));
  exp->add_option("--resolution-index", c.resolution, "Which configured resolution to use");
  exp->add_option("--commutator", function, "Export [b, T] for this function id instead of T");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  if (seed_opt->count()) c.seed = seed;
  if (c.threads > 0) set_num_threads(c.threads);

  try {
    if (*run) return cmd_run(c);
    if (*diag) return cmd_diagnose(c);
    return cmd_export(c, format, function);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "scenario error: %s\n", e.what());
    return kExitScenario;
  }
}
