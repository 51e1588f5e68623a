#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "schattenlab/bessel.hpp"
#include "schattenlab/diagnostics.hpp"
#include "schattenlab/functions.hpp"
#include "schattenlab/hajlasz.hpp"
#include "schattenlab/operators.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab {

inline constexpr const char* kVersion = "0.1.0";

// Malformed or out-of-range configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A module failed while evaluating an otherwise valid scenario.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpaceConfig {
  Domain domain = Domain::interval(0.0, 1.0);
  std::vector<std::vector<std::size_t>> resolutions;   // one per-axis vector per run
  WeightSpec mu;
  WeightSpec nu;
};

struct DyadicConfig {
  int generations = 0;   // 0: deepest generation with cubes above the cell size
  double expansion = 3.0;
  bool adjacent = true;
};

struct OperatorConfig {
  enum class Kind { none, hilbert, riesz, bessel };
  Kind kind = Kind::none;
  std::size_t component = 1;
  double lambda = 0.0;
  DiagonalPolicy diagonal = DiagonalPolicy::principal_value_rowsum;
  std::optional<WeightSpec> weight;   // A_2 weight for weighted Schatten quantities
  bool cell_diagonal = false;         // commutator diagonal from the kernel's cell self-term
};

// One configured quantity. name is one of: schatten, osc, osc_dyadic_sum,
// besov_adhoc, besov_classical, hajlasz, sobolev, mb_weak.
struct QuantityConfig {
  std::string name;
  std::string label;
  double p = 2.0;
  double q = 2.0;
  double r = 1.0;
  double d = 1.0;
  Measure measure = Measure::mu;
  bool weighted = false;   // schatten: view the commutator on L^2(w dmu)
  bool adjacent = false;   // osc: index over the whole adjacent family
  HajlaszMode mode = HajlaszMode::convex_program;
};

struct RatioConfig {
  std::string numerator;
  std::string denominator;
};

struct ScenarioConfig {
  std::string name = "scenario";
  std::uint64_t seed = 0;
  SpaceConfig space;
  DyadicConfig dyadic;
  OperatorConfig op;
  std::vector<FunctionSpec> functions;
  std::vector<QuantityConfig> quantities;
  std::vector<RatioConfig> ratios;
  DiagnosticsConfig diagnostics;
  bool diagnostics_given = false;
  bool write_profiles = false;
  nlohmann::json source;   // the parsed document, after overrides
};

// Parses the JSON config document. `seed_override` replaces the config seed
// (and the seed of every seeded function) when given. Throws ConfigError.
ScenarioConfig parse_config(const nlohmann::json& doc, std::optional<std::uint64_t> seed_override = {});
ScenarioConfig load_config(const std::string& path, std::optional<std::uint64_t> seed_override = {});

std::string resolution_label(std::span<const std::size_t> resolution);

struct NormRow {
  std::string scenario;
  std::string function;
  std::string resolution;
  std::string quantity;
  double p = 0.0, q = 0.0, r = 0.0, d = 0.0;
  std::string measure;
  double value = 0.0;
  std::string status = "ok";   // "ok" or "error"
  std::string message;
};

struct RatioSummary {
  std::string numerator;
  std::string denominator;
  double min = 0.0;
  double max = 0.0;
  double band = 0.0;   // max / min
  std::size_t count = 0;
  std::size_t skipped = 0;   // zero denominators
};

// Refinement classification of one (function, quantity) sequence.
struct Classification {
  std::string function;
  std::string quantity;
  std::vector<double> values;
  std::string verdict;   // growth, stable, inconclusive
};

inline constexpr double kGrowthStep = 0.10;
inline constexpr double kStableTotal = 0.10;

struct NormReport {
  std::vector<NormRow> rows;
  std::vector<RatioSummary> ratios;
  std::vector<Classification> classifications;
  bool failed = false;
};

// growth: every step increases by >= kGrowthStep; stable: |last/first - 1| <=
// kStableTotal (or all zero); otherwise inconclusive.
std::string classify(std::span<const double> values);

// Singular-value profiles of the commutators, keyed like the rows.
struct ProfileRecord {
  std::string function;
  std::string resolution;
  std::vector<double> values;
};

NormReport run_scenario(const ScenarioConfig& cfg, std::vector<ProfileRecord>* profiles = nullptr);
// run_scenario plus classifications; requires at least three resolutions.
NormReport refinement_study(const ScenarioConfig& cfg, std::vector<ProfileRecord>* profiles = nullptr);

RatioSummary summarize_ratio(const std::vector<NormRow>& rows, const RatioConfig& ratio);

// Building blocks shared with the CLI.
MetricMeasureSpace build_space(const ScenarioConfig& cfg, std::size_t resolution_index);
OperatorMatrix build_operator(const ScenarioConfig& cfg, const MetricMeasureSpace& space);
// [b, T] for the configured operator, honouring operator.commutator_diagonal.
OperatorMatrix build_commutator(const ScenarioConfig& cfg, const MetricMeasureSpace& space,
                                std::span<const double> b, const OperatorMatrix& T, Exec exec = Exec::parallel);
// Default diagnostics sample for a space when the config gives none.
DiagnosticsConfig default_diagnostics(const MetricMeasureSpace& space);

}  // namespace schattenlab
