#include "schattenlab/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>

#include "schattenlab/dyadic.hpp"
#include "schattenlab/funcnorms.hpp"
#include "schattenlab/hajlasz.hpp"
#include "schattenlab/oscnorms.hpp"
#include "schattenlab/parallel.hpp"
#include "schattenlab/schatten.hpp"

namespace schattenlab {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    throw ConfigError(std::string("'") + key + "' must be a number or \"inf\"");
  }
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

std::string fmt(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

Domain parse_domain(const json& j) {
  const auto kind = j.value("kind", std::string("interval"));
  const double a = j.value("lower", 0.0), b = j.value("upper", 1.0);
  if (kind == "interval") return Domain::interval(a, b);
  if (kind == "square") return Domain::square(a, b, j.value("dim", std::size_t{2}));
  if (kind == "half_line") return Domain::half_line(j.value("height", 1.0));
  if (kind == "half_space")
    return Domain::half_space(a, b, j.value("height", 1.0), j.value("lateral", std::size_t{1}));
  throw ConfigError("unknown domain kind '" + kind + "'");
}

WeightSpec parse_weight(const json& j, std::size_t dim) {
  if (j.is_null()) return WeightSpec::constant();
  const auto kind = j.value("kind", std::string("constant"));
  if (kind == "constant") return WeightSpec::constant();
  if (kind == "power")
    return WeightSpec::power(number(j, "exponent", 0.0), j.value("axis", dim - 1));
  if (kind == "bessel") return WeightSpec::power(2.0 * number(j, "lambda", 0.0), dim - 1);
  if (kind == "tabulated") return WeightSpec::tabulated(j.at("values").get<std::vector<double>>());
  throw ConfigError("unknown weight kind '" + kind + "'");
}

Measure parse_measure(const json& j) {
  const auto s = j.value("measure", std::string("mu"));
  if (s == "mu") return Measure::mu;
  if (s == "nu") return Measure::nu;
  throw ConfigError("measure must be 'mu' or 'nu'");
}

const std::vector<std::string> kQuantityNames = {"schatten", "osc", "osc_dyadic_sum", "besov_adhoc",
                                                 "besov_classical", "hajlasz", "sobolev", "mb_weak"};

std::string default_label(const QuantityConfig& q) {
  const std::string m = to_string(q.measure);
  if (q.name == "schatten")
    return std::string(q.weighted ? "schatten_w" : "schatten") + "_p" + fmt(q.p) + "_q" + fmt(q.q);
  if (q.name == "osc")
    return std::string(q.adjacent ? "osc_family" : "osc") + "_r" + fmt(q.r) + "_p" + fmt(q.p) + "_q" +
           fmt(q.q) + "_" + m;
  if (q.name == "osc_dyadic_sum") return "osc_dyadic_sum_r" + fmt(q.r) + "_p" + fmt(q.p) + "_q" + fmt(q.q) + "_" + m;
  if (q.name == "besov_adhoc") return "besov_adhoc_p" + fmt(q.p) + "_" + m;
  if (q.name == "besov_classical") return "besov_classical_p" + fmt(q.p) + "_d" + fmt(q.d) + "_" + m;
  if (q.name == "hajlasz")
    return std::string("hajlasz_") + (q.mode == HajlaszMode::upper_bound ? "ub" : "cp") + "_p" + fmt(q.p);
  if (q.name == "sobolev") return "sobolev_p" + fmt(q.p);
  return "mb_weak_d" + fmt(q.d);
}

QuantityConfig parse_quantity(const json& j) {
  QuantityConfig q;
  q.name = j.at("name").get<std::string>();
  if (std::find(kQuantityNames.begin(), kQuantityNames.end(), q.name) == kQuantityNames.end())
    throw ConfigError("unknown quantity '" + q.name + "'");
  q.p = number(j, "p", 2.0);
  q.q = number(j, "q", q.p);
  q.r = number(j, "r", 1.0);
  q.d = number(j, "d", 1.0);
  q.measure = parse_measure(j);
  q.weighted = j.value("weighted", false);
  q.adjacent = j.value("adjacent", false);
  const auto mode = j.value("mode", std::string("convex_program"));
  if (mode == "upper_bound") q.mode = HajlaszMode::upper_bound;
  else if (mode == "convex_program") q.mode = HajlaszMode::convex_program;
  else throw ConfigError("hajlasz mode must be 'upper_bound' or 'convex_program'");
  if (!(q.p > 0.0) || !(q.q > 0.0) || !(q.r > 0.0) || !(q.d > 0.0))
    throw ConfigError("quantity parameters must be positive");
  if (q.name == "hajlasz" && q.p < 1.0) throw ConfigError("hajlasz requires p >= 1");
  q.label = j.value("label", default_label(q));
  return q;
}

OperatorConfig parse_operator(const json& j, std::size_t dim) {
  OperatorConfig op;
  if (j.is_null()) return op;
  const auto kind = j.value("kernel", std::string("none"));
  if (kind == "none") op.kind = OperatorConfig::Kind::none;
  else if (kind == "hilbert") op.kind = OperatorConfig::Kind::hilbert;
  else if (kind == "riesz") op.kind = OperatorConfig::Kind::riesz;
  else if (kind == "bessel") op.kind = OperatorConfig::Kind::bessel;
  else throw ConfigError("unknown kernel '" + kind + "'");
  op.component = j.value("component", std::size_t{1});
  if (op.component < 1 || op.component > dim) throw ConfigError("operator component out of range");
  op.lambda = number(j, "lambda", 0.0);
  if (op.lambda < 0.0) throw ConfigError("lambda must be nonnegative");
  const auto diag = j.value("diagonal", std::string("principal_value_rowsum"));
  if (diag == "zero") op.diagonal = DiagonalPolicy::zero;
  else if (diag == "principal_value_rowsum") op.diagonal = DiagonalPolicy::principal_value_rowsum;
  else throw ConfigError("unknown diagonal policy '" + diag + "'");
  if (j.contains("weight")) op.weight = parse_weight(j["weight"], dim);
  const auto cdiag = j.value("commutator_diagonal", std::string("zero"));
  if (cdiag == "cell") op.cell_diagonal = true;
  else if (cdiag != "zero") throw ConfigError("commutator_diagonal must be 'zero' or 'cell'");
  if (op.cell_diagonal && op.kind == OperatorConfig::Kind::bessel)
    throw ConfigError("commutator_diagonal 'cell' needs a hilbert or riesz kernel");
  if (op.kind == OperatorConfig::Kind::hilbert && dim != 1) throw ConfigError("hilbert kernel needs a 1D domain");
  return op;
}

std::vector<std::vector<std::size_t>> parse_resolutions(const json& j, std::size_t dim) {
  std::vector<std::vector<std::size_t>> out;
  if (!j.is_array() || j.empty()) throw ConfigError("space.resolutions must be a nonempty list");
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      out.emplace_back(dim, e.get<std::size_t>());
    } else if (e.is_array()) {
      auto v = e.get<std::vector<std::size_t>>();
      if (v.size() != dim) throw ConfigError("resolution has the wrong number of axes");
      out.push_back(std::move(v));
    } else {
      throw ConfigError("resolution entries must be integers or per-axis lists");
    }
    for (auto n : out.back())
      if (n < 2) throw ConfigError("resolution must be at least 2 per axis");
  }
  return out;
}

DiagnosticsConfig parse_diagnostics(const json& j) {
  DiagnosticsConfig d;
  d.centers = j.at("centers").get<std::vector<std::size_t>>();
  const auto& r = j.at("radii");
  if (r.is_array()) {
    d.radii = r.get<std::vector<double>>();
  } else {
    d.radii = DiagnosticsConfig::geometric_radii(number(r, "start", 0.01), number(r, "factor", 2.0),
                                                 r.value("count", std::size_t{6}));
  }
  d.tolerance = number(j, "tolerance", d.tolerance);
  d.min_scale_ratio = number(j, "min_scale_ratio", d.min_scale_ratio);
  return d;
}

}  // namespace

ScenarioConfig parse_config(const json& doc_in, std::optional<std::uint64_t> seed_override) {
  json doc = doc_in;
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (seed_override) doc["seed"] = *seed_override;
  try {
    ScenarioConfig cfg;
    cfg.name = doc.value("name", cfg.name);
    cfg.seed = doc.value("seed", std::uint64_t{0});

    const auto& sp = doc.at("space");
    cfg.space.domain = parse_domain(sp.at("domain"));
    const std::size_t dim = cfg.space.domain.dim();
    cfg.space.resolutions = parse_resolutions(sp.at("resolutions"), dim);
    cfg.space.mu = parse_weight(sp.value("mu", json()), dim);
    cfg.space.nu = parse_weight(sp.value("nu", json()), dim);

    if (doc.contains("dyadic")) {
      const auto& dy = doc["dyadic"];
      cfg.dyadic.generations = dy.value("generations", 0);
      cfg.dyadic.expansion = number(dy, "expansion", 3.0);
      cfg.dyadic.adjacent = dy.value("adjacent", true);
      if (cfg.dyadic.generations < 0) throw ConfigError("dyadic.generations must be >= 0");
      if (cfg.dyadic.expansion < 1.0) throw ConfigError("dyadic.expansion must be >= 1");
    }

    cfg.op = parse_operator(doc.value("operator", json()), dim);

    bool random_used = false;
    if (doc.contains("functions")) {
      for (const auto& f : doc["functions"]) {
        auto spec = function_from_json(f, cfg.seed);
        if (spec.kind == FunctionSpec::Kind::random_trig) {
          random_used = true;
          if (seed_override) spec.seed = cfg.seed;
        }
        cfg.functions.push_back(std::move(spec));
      }
    }
    if (doc.contains("family")) {
      const auto& fam = doc["family"];
      random_used = true;
      auto extra = standard_family(fam.value("count", std::size_t{10}), dim, cfg.seed);
      for (auto& f : extra) cfg.functions.push_back(std::move(f));
    }
    if (random_used && !doc.contains("seed")) throw ConfigError("a seed is required for random function families");
    {
      std::map<std::string, int> seen;
      for (const auto& f : cfg.functions)
        if (seen[f.id]++) throw ConfigError("duplicate function id '" + f.id + "'");
    }

    if (doc.contains("quantities"))
      for (const auto& q : doc["quantities"]) cfg.quantities.push_back(parse_quantity(q));
    {
      std::map<std::string, int> seen;
      for (const auto& q : cfg.quantities)
        if (seen[q.label]++) throw ConfigError("duplicate quantity label '" + q.label + "'");
    }
    for (const auto& q : cfg.quantities) {
      if (q.name == "schatten" && cfg.op.kind == OperatorConfig::Kind::none)
        throw ConfigError("schatten quantity requires an operator");
      if (q.weighted && !cfg.op.weight) throw ConfigError("weighted schatten quantity requires operator.weight");
    }
    if (doc.contains("ratios")) {
      for (const auto& r : doc["ratios"]) {
        RatioConfig rc{r.at(0).get<std::string>(), r.at(1).get<std::string>()};
        auto known = [&](const std::string& l) {
          return std::any_of(cfg.quantities.begin(), cfg.quantities.end(),
                             [&](const QuantityConfig& q) { return q.label == l; });
        };
        if (!known(rc.numerator) || !known(rc.denominator))
          throw ConfigError("ratio refers to an unknown quantity label");
        cfg.ratios.push_back(rc);
      }
    }
    if (doc.contains("diagnostics")) {
      cfg.diagnostics = parse_diagnostics(doc["diagnostics"]);
      cfg.diagnostics_given = true;
    }
    if (doc.contains("outputs")) cfg.write_profiles = doc["outputs"].value("profiles", false);
    cfg.source = doc;
    return cfg;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

ScenarioConfig load_config(const std::string& path, std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(doc, seed_override);
}

std::string resolution_label(std::span<const std::size_t> resolution) {
  std::string s;
  for (std::size_t k = 0; k < resolution.size(); ++k) {
    if (k) s += 'x';
    s += std::to_string(resolution[k]);
  }
  return s;
}

MetricMeasureSpace build_space(const ScenarioConfig& cfg, std::size_t resolution_index) {
  try {
    return build_grid_space(cfg.space.domain, cfg.space.resolutions.at(resolution_index), cfg.space.mu,
                            cfg.space.nu);
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("space: ") + e.what());
  }
}

OperatorMatrix build_operator(const ScenarioConfig& cfg, const MetricMeasureSpace& space) {
  switch (cfg.op.kind) {
    case OperatorConfig::Kind::hilbert:
      return kernel_matrix(hilbert_kernel(), space, cfg.op.diagonal);
    case OperatorConfig::Kind::riesz:
      return kernel_matrix(riesz_kernel(space.dim(), cfg.op.component), space, cfg.op.diagonal);
    case OperatorConfig::Kind::bessel:
      return bessel_riesz_operator({cfg.op.lambda, cfg.op.component}, space).op;
    case OperatorConfig::Kind::none:
      break;
  }
  throw ScenarioError("no operator configured");
}

OperatorMatrix build_commutator(const ScenarioConfig& cfg, const MetricMeasureSpace& space,
                                std::span<const double> b, const OperatorMatrix& T, Exec exec) {
  if (!cfg.op.cell_diagonal) return commutator(b, T, exec);
  const auto kernel =
      cfg.op.kind == OperatorConfig::Kind::hilbert ? hilbert_kernel() : riesz_kernel(space.dim(), cfg.op.component);
  return commutator(b, T, space, kernel, exec);
}

DiagnosticsConfig default_diagnostics(const MetricMeasureSpace& space) {
  DiagnosticsConfig d;
  const std::size_t n = space.size();
  d.centers = {0, n / 8, n / 4, n / 2};
  d.centers.erase(std::unique(d.centers.begin(), d.centers.end()), d.centers.end());
  double h = 0.0;
  for (double s : space.spacing()) h = std::max(h, s);
  if (h == 0.0) h = space.domain().scale() / static_cast<double>(n);
  const double top = 0.25 * space.domain().scale();
  double r = 4.0 * h;
  if (r > top) r = h;
  while (r <= top * (1.0 + 1e-12)) {
    d.radii.push_back(r);
    r *= 2.0;
  }
  if (d.radii.empty()) d.radii.push_back(top);
  d.min_scale_ratio = 16.0;
  return d;
}

std::string classify(std::span<const double> values) {
  if (values.empty()) return "inconclusive";
  const bool all_zero = std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
  if (all_zero) return "stable";
  bool growth = true;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (!(values[k] >= (1.0 + kGrowthStep) * values[k - 1]) || !(values[k - 1] > 0.0)) growth = false;
  if (growth && values.size() > 1) return "growth";
  if (values.front() != 0.0 && std::abs(values.back() / values.front() - 1.0) <= kStableTotal) return "stable";
  return "inconclusive";
}

RatioSummary summarize_ratio(const std::vector<NormRow>& rows, const RatioConfig& ratio) {
  RatioSummary s;
  s.numerator = ratio.numerator;
  s.denominator = ratio.denominator;
  s.min = std::numeric_limits<double>::infinity();
  s.max = 0.0;
  std::map<std::pair<std::string, std::string>, std::pair<double, double>> cells;
  for (const auto& row : rows) {
    if (row.status != "ok") continue;
    auto& c = cells.try_emplace({row.resolution, row.function}, kNaN, kNaN).first->second;
    if (row.quantity == ratio.numerator) c.first = row.value;
    if (row.quantity == ratio.denominator) c.second = row.value;
  }
  for (const auto& [key, c] : cells) {
    if (std::isnan(c.first) || std::isnan(c.second)) continue;
    if (c.second == 0.0) {
      ++s.skipped;
      continue;
    }
    const double v = c.first / c.second;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    ++s.count;
  }
  if (s.count == 0) {
    s.min = s.max = s.band = kNaN;
  } else {
    s.band = s.min > 0.0 ? s.max / s.min : std::numeric_limits<double>::infinity();
  }
  return s;
}

namespace {

struct ResolutionContext {
  const MetricMeasureSpace* space;
  const OperatorMatrix* op;
  const std::vector<DyadicSystem>* family;
  std::vector<double> scales;
};

int deepest_generation(const MetricMeasureSpace& space) {
  double h = 0.0;
  for (double s : space.spacing()) h = std::max(h, s);
  int g = 0;
  while (std::ldexp(space.domain().scale(), -(g + 1)) >= h * (1.0 - 1e-12)) ++g;
  return std::max(g, 1);
}

double evaluate(const QuantityConfig& q, const ScenarioConfig& cfg, const ResolutionContext& ctx,
                const std::vector<double>& b, std::map<bool, SingularValueProfile>& sv_cache, Exec exec) {
  const auto& space = *ctx.space;
  if (q.name == "schatten") {
    auto it = sv_cache.find(q.weighted);
    if (it == sv_cache.end()) {
      auto C = build_commutator(cfg, space, b, *ctx.op, exec);
      if (q.weighted) C = apply_weight(C, space, *cfg.op.weight);
      it = sv_cache.emplace(q.weighted, singular_values(C)).first;
    }
    return schatten_norm(it->second, {q.p, q.q});
  }
  if (q.name == "osc") {
    if (q.adjacent) return osc_norm(space, b, *ctx.family, {q.p, q.q}, q.r, q.measure, exec);
    return osc_norm(space, b, ctx.family->front(), {q.p, q.q}, q.r, q.measure, exec);
  }
  if (q.name == "osc_dyadic_sum") return osc_norm_dyadic_sum(space, b, *ctx.family, {q.p, q.q}, q.r, q.measure, exec);
  if (q.name == "besov_adhoc") return besov_adhoc(space, b, q.p, q.measure, exec);
  if (q.name == "besov_classical") return besov_classical(space, b, q.p, q.d, q.measure, exec);
  if (q.name == "hajlasz") return hajlasz_norm(space, b, q.p, q.mode).objective;
  if (q.name == "sobolev") return sobolev_norm_grid(space, b, q.p);
  return mb_weak_norm(space, b, q.d, ctx.scales, exec);
}

NormRow make_row(const ScenarioConfig& cfg, const std::string& function, const std::string& res,
                 const QuantityConfig& q) {
  NormRow row;
  row.scenario = cfg.name;
  row.function = function;
  row.resolution = res;
  row.quantity = q.label;
  row.p = row.q = row.r = row.d = kNaN;
  const bool uses_pq = q.name == "schatten" || q.name == "osc" || q.name == "osc_dyadic_sum";
  if (uses_pq) {
    row.p = q.p;
    row.q = q.q;
  } else if (q.name != "mb_weak") {
    row.p = q.p;
  }
  if (q.name == "osc" || q.name == "osc_dyadic_sum") row.r = q.r;
  if (q.name == "besov_classical" || q.name == "mb_weak") row.d = q.d;
  if (q.name == "osc" || q.name == "osc_dyadic_sum" || q.name == "besov_adhoc" || q.name == "besov_classical")
    row.measure = to_string(q.measure);
  else if (q.name == "hajlasz")
    row.measure = "mu";
  else if (q.name == "sobolev" || q.name == "mb_weak")
    row.measure = "nu";
  return row;
}

bool needs_dyadic(const ScenarioConfig& cfg) {
  return std::any_of(cfg.quantities.begin(), cfg.quantities.end(), [](const QuantityConfig& q) {
    return q.name == "osc" || q.name == "osc_dyadic_sum";
  });
}

}  // namespace

NormReport run_scenario(const ScenarioConfig& cfg, std::vector<ProfileRecord>* profiles) {
  NormReport report;
  const bool want_op = std::any_of(cfg.quantities.begin(), cfg.quantities.end(),
                                   [](const QuantityConfig& q) { return q.name == "schatten"; });
  const std::size_t nf = cfg.functions.size();
  if (nf == 0 || cfg.quantities.empty()) return report;

  for (std::size_t ri = 0; ri < cfg.space.resolutions.size() && !report.failed; ++ri) {
    const std::string res = resolution_label(cfg.space.resolutions[ri]);
    auto error_row = [&](const std::string& fn, const std::string& msg) {
      NormRow row;
      row.scenario = cfg.name;
      row.function = fn;
      row.resolution = res;
      row.quantity = "error";
      row.p = row.q = row.r = row.d = row.value = kNaN;
      row.status = "error";
      row.message = msg;
      report.rows.push_back(row);
      report.failed = true;
    };

    std::optional<MetricMeasureSpace> space;
    std::optional<OperatorMatrix> op;
    std::vector<DyadicSystem> family;
    ResolutionContext ctx{};
    try {
      space.emplace(build_space(cfg, ri));
      if (want_op) op.emplace(build_operator(cfg, *space));
      if (needs_dyadic(cfg)) {
        const int g = cfg.dyadic.generations > 0 ? cfg.dyadic.generations : deepest_generation(*space);
        if (cfg.dyadic.adjacent) family = build_adjacent_family(*space, g);
        else family.push_back(build_dyadic_system(*space, g));
        for (auto& s : family) s.set_expansion(cfg.dyadic.expansion);
      }
      ctx.space = &*space;
      ctx.op = op ? &*op : nullptr;
      ctx.family = &family;
      if (std::any_of(cfg.quantities.begin(), cfg.quantities.end(),
                      [](const QuantityConfig& q) { return q.name == "mb_weak"; }))
        ctx.scales = dyadic_scales(*space);
    } catch (const std::exception& e) {
      error_row("", e.what());
      break;
    }

    // Functions run in parallel; kernels inside each cell run serially. With
    // a single function the kernels themselves take the threads.
    const Exec outer = nf > 1 ? Exec::parallel : Exec::serial;
    const Exec inner = nf > 1 ? Exec::serial : Exec::parallel;
    std::vector<std::vector<double>> values(nf, std::vector<double>(cfg.quantities.size(), kNaN));
    std::vector<std::string> errors(nf);
    std::vector<std::vector<double>> sv(nf);
    for_each_index(nf, outer, [&](std::size_t fi) {
      try {
        const auto b = sample(*space, cfg.functions[fi]);
        std::map<bool, SingularValueProfile> cache;
        for (std::size_t qi = 0; qi < cfg.quantities.size(); ++qi)
          values[fi][qi] = evaluate(cfg.quantities[qi], cfg, ctx, b, cache, inner);
        if (auto it = cache.find(false); it != cache.end()) sv[fi] = it->second.values;
      } catch (const std::exception& e) {
        errors[fi] = e.what();
      }
    });

    for (std::size_t fi = 0; fi < nf; ++fi) {
      const auto& fid = cfg.functions[fi].id;
      if (!errors[fi].empty()) {
        error_row(fid, errors[fi]);
        continue;
      }
      for (std::size_t qi = 0; qi < cfg.quantities.size(); ++qi) {
        auto row = make_row(cfg, fid, res, cfg.quantities[qi]);
        row.value = values[fi][qi];
        report.rows.push_back(std::move(row));
      }
      if (profiles && !sv[fi].empty()) profiles->push_back({fid, res, std::move(sv[fi])});
    }
  }

  for (const auto& r : cfg.ratios) report.ratios.push_back(summarize_ratio(report.rows, r));

  // Classifications whenever there is a sequence to classify.
  if (cfg.space.resolutions.size() >= 2 && !report.failed) {
    for (const auto& f : cfg.functions) {
      for (const auto& q : cfg.quantities) {
        Classification c{f.id, q.label, {}, {}};
        for (const auto& row : report.rows)
          if (row.function == f.id && row.quantity == q.label) c.values.push_back(row.value);
        c.verdict = classify(c.values);
        report.classifications.push_back(std::move(c));
      }
    }
  }
  return report;
}

NormReport refinement_study(const ScenarioConfig& cfg, std::vector<ProfileRecord>* profiles) {
  if (cfg.space.resolutions.size() < 3) throw ConfigError("refinement study needs at least three resolutions");
  return run_scenario(cfg, profiles);
}

}  // namespace schattenlab
