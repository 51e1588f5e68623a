// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Commutators of Hilbert/Riesz kernels carry the cell
// self-term on the diagonal (see commutator() in operators.hpp).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "schattenlab/bessel.hpp"
#include "schattenlab/diagnostics.hpp"
#include "schattenlab/dyadic.hpp"
#include "schattenlab/funcnorms.hpp"
#include "schattenlab/functions.hpp"
#include "schattenlab/hajlasz.hpp"
#include "schattenlab/operators.hpp"
#include "schattenlab/oscnorms.hpp"
#include "schattenlab/reference.hpp"
#include "schattenlab/scenario.hpp"
#include "schattenlab/schatten.hpp"

using namespace schattenlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

constexpr std::uint64_t kSeed = 20240611;

double band(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

MetricMeasureSpace line(std::size_t n) {
  return build_grid_space(Domain::interval(0.0, 1.0), n, WeightSpec::constant(), WeightSpec::constant());
}

Outcome rank_one_commutator() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto space = line(256);
  const auto T = kernel_matrix(hilbert_kernel(), space);
  std::vector<double> b(space.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = space.coord(i, 0);
  const auto prof = singular_values(commutator(b, T, space, hilbert_kernel()));
  const auto above = std::count_if(prof.values.begin(), prof.values.end(), [](double s) { return s > 1e-8; });
  const double target = 1.0 / std::numbers::pi;
  bool ok = above == 1 && std::abs(prof.values[0] / target - 1.0) <= 0.02;
  double worst = 0.0;
  for (auto [p, q] : {std::pair{1.0, 1.0}, {2.0, 2.0}, {1.0, LorentzParams::inf}}) {
    const double v = schatten_norm(prof, {p, q});
    worst = std::max(worst, std::abs(v / target - 1.0));
  }
  ok = ok && worst <= 0.02;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && secs < 10.0;
  return {ok, fmt("nonzero=%d s0=%.6f (1/pi=%.6f) worst S^{p,q} rel.err=%.2e, %.2fs", int(above), prof.values[0],
                  target, worst, secs)};
}

Outcome weighted_svd_oracle() {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> entry(-1.0, 1.0), weight(0.1, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    OperatorMatrix T;
    T.entries.resize(5, 5);
    T.inner_weights.resize(5);
    for (int i = 0; i < 5; ++i) {
      T.inner_weights(i) = weight(rng);
      for (int j = 0; j < 5; ++j) T.entries(i, j) = entry(rng);
    }
    const auto s = singular_values(T).values;
    const auto o = reference::weighted_singular_values(T);
    for (std::size_t k = 0; k < s.size(); ++k) worst = std::max(worst, std::abs(s[k] - o[k]));
  }
  return {worst <= 1e-10, fmt("max |s - oracle| = %.2e over 50 operators", worst)};
}

Outcome lorentz_reduction() {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> s(64);
    for (auto& x : s) x = u(rng);
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
      const double a = lorentz_seq_norm(s, {p, p});
      const double b = reference::lp_sum(s, p);
      worst = std::max(worst, std::abs(a - b) / b);
    }
  }
  std::vector<double> s(64);
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = 1.0 / std::sqrt(double(n + 1));
  const double v = lorentz_seq_norm(s, {2.0, LorentzParams::inf});
  const bool ok = worst <= 1e-12 && std::abs(v - 1.0) <= 4 * std::numeric_limits<double>::epsilon();
  return {ok, fmt("max rel.err l^{p,p} vs l^p = %.2e; l^{2,inf} of (n+1)^{-1/2} = %.17g", worst, v)};
}

struct OscSetup {
  MetricMeasureSpace space = line(512);
  std::vector<DyadicSystem> family = build_adjacent_family(space, 8);
  std::vector<FunctionSpec> functions = standard_family(20, 1, kSeed);
};

OscSetup& osc_setup() {
  static OscSetup s;
  return s;
}

Outcome osc_exponent_band() {
  const auto t0 = std::chrono::steady_clock::now();
  auto& s = osc_setup();
  double lo = 1e300, hi = 0.0;
  for (const auto& f : s.functions) {
    const auto b = sample(s.space, f);
    const double r1 = osc_norm(s.space, b, s.family[0], {2.0, 2.0}, 1.0, Measure::mu);
    const double r2 = osc_norm(s.space, b, s.family[0], {2.0, 2.0}, 2.0, Measure::mu);
    lo = std::min(lo, r1 / r2);
    hi = std::max(hi, r1 / r2);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = lo >= 1.0 / 8.0 && hi <= 8.0 && secs < 60.0;
  return {ok, fmt("Osc_1/Osc_2 in [%.4f, %.4f], %.2fs", lo, hi, secs)};
}

Outcome adjacent_family_band() {
  auto& s = osc_setup();
  double lo = 1e300, hi = 0.0;
  for (const auto& f : s.functions) {
    const auto b = sample(s.space, f);
    const double balls = osc_norm(s.space, b, s.family[0], {2.0, 2.0}, 1.0, Measure::mu);
    const double cubes = osc_norm_dyadic_sum(s.space, b, s.family, {2.0, 2.0}, 1.0, Measure::mu);
    lo = std::min(lo, balls / cubes);
    hi = std::max(hi, balls / cubes);
  }
  return {lo >= 1.0 / 8.0 && hi <= 8.0, fmt("ball norm / sum over %zu systems in [%.4f, %.4f]", s.family.size(), lo, hi)};
}

Outcome measure_change_band() {
  const auto functions = standard_family(20, 1, kSeed);
  std::vector<double> ratios;
  for (std::size_t n : {128, 256, 512}) {
    const auto space = build_grid_space(Domain::half_line(1.0), n, WeightSpec::power(0.5), WeightSpec::constant());
    const int g = static_cast<int>(std::lround(std::log2(double(n))));
    const auto sys = build_dyadic_system(space, g);
    for (const auto& f : functions) {
      const auto b = sample(space, f);
      ratios.push_back(osc_norm(space, b, sys, {2.0, 2.0}, 1.0, Measure::mu) /
                       osc_norm(space, b, sys, {2.0, 2.0}, 1.0, Measure::nu));
    }
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  return {*lo >= 0.1 && *hi <= 10.0, fmt("Osc(mu)/Osc(nu) in [%.4f, %.4f] over %zu cases", *lo, *hi, ratios.size())};
}

Outcome commutator_besov_band() {
  const auto functions = standard_family(10, 1, kSeed);
  std::string detail;
  bool ok = true;
  std::vector<std::vector<double>> ratios(3);
  const double ps[] = {1.5, 2.0, 3.0};
  for (std::size_t n : {128, 256}) {
    const auto space = line(n);
    const auto T = kernel_matrix(hilbert_kernel(), space);
    for (const auto& f : functions) {
      const auto b = sample(space, f);
      const auto prof = singular_values(commutator(b, T, space, hilbert_kernel()));
      for (int k = 0; k < 3; ++k)
        ratios[k].push_back(schatten_norm(prof, {ps[k], ps[k]}) / besov_adhoc(space, b, ps[k], Measure::nu));
    }
  }
  for (int k = 0; k < 3; ++k) {
    const double bd = band(ratios[k]);
    ok = ok && bd <= 10.0;
    detail += fmt("p=%.1f band %.3f; ", ps[k], bd);
  }
  return {ok, detail};
}

Outcome critical_cutoff() {
  const auto t0 = std::chrono::steady_clock::now();
  FunctionSpec f;
  f.kind = FunctionSpec::Kind::sinusoid;
  f.id = "sin";
  f.frequency = {1.0, 0.0};
  std::vector<double> s2, s4;
  for (std::size_t n : {16, 32, 48}) {
    const auto space =
        build_grid_space(Domain::square(0.0, 1.0), n, WeightSpec::constant(), WeightSpec::constant());
    const auto kernel = riesz_kernel(2, 1);
    const auto prof = singular_values(commutator(sample(space, f), kernel_matrix(kernel, space), space, kernel));
    s2.push_back(schatten_norm(prof, {2.0, 2.0}));
    s4.push_back(schatten_norm(prof, {4.0, 4.0}));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double g1 = s2[1] / s2[0] - 1.0, g2 = s2[2] / s2[1] - 1.0;
  const double c4 = std::abs(s4[2] / s4[0] - 1.0);
  const bool ok = g1 >= 0.2 && g2 >= 0.2 && c4 <= 0.1 && secs < 300.0;
  return {ok, fmt("S2 %.4f -> %.4f -> %.4f (steps %+.1f%%, %+.1f%%); S4 %.4f -> %.4f -> %.4f (total %.1f%%), %.1fs",
                  s2[0], s2[1], s2[2], 100 * g1, 100 * g2, s4[0], s4[1], s4[2], 100 * c4, secs)};
}

Outcome bessel_reduction() {
  const auto plain =
      build_grid_space(Domain::half_line(1.0), 128, WeightSpec::constant(), WeightSpec::constant());
  const auto a = bessel_riesz_operator({0.0, 1}, plain).op;
  const auto b = divergence_form_riesz(plain, [](std::span<const double>) { return 1.0; }, 1).op;
  const double diff = (a.entries - b.entries).cwiseAbs().maxCoeff();
  double top = 0.0;
  for (double lambda : {0.0, 0.25, 1.0}) {
    const auto space = build_grid_space(Domain::half_line(1.0), 128, WeightSpec::power(2.0 * lambda),
                                        WeightSpec::constant());
    top = std::max(top, singular_values(bessel_riesz_operator({lambda, 1}, space).op).values[0]);
  }
  return {diff <= 1e-10 && top <= 1.0 + 1e-8, fmt("max entry diff %.2e; largest singular value %.12f", diff, top)};
}

Outcome weighted_stability() {
  const auto space = line(256);
  const auto T = kernel_matrix(hilbert_kernel(), space);
  const auto w = WeightSpec::power(0.5);
  std::vector<double> ratios;
  for (const auto& f : standard_family(10, 1, kSeed)) {
    const auto C = commutator(sample(space, f), T, space, hilbert_kernel());
    ratios.push_back(schatten_norm(singular_values(apply_weight(C, space, w)), {2.0, 2.0}) /
                     schatten_norm(singular_values(C), {2.0, 2.0}));
  }
  std::vector<double> x(space.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = space.coord(i, 0);
  const auto C = commutator(x, T, space, hilbert_kernel());
  const auto r0 = singular_values(C).numerical_rank();
  const auto r1 = singular_values(apply_weight(C, space, w)).numerical_rank();
  const double bd = band(ratios);
  return {bd <= 10.0 && r0 == r1, fmt("S2 weighted/unweighted band %.3f; rank %zu -> %zu", bd, r0, r1)};
}

Outcome hajlasz_optimality() {
  const auto two = MetricMeasureSpace::from_points(1, {0.0, 1.0}, {0.5, 0.5}, {0.5, 0.5});
  const double f2[] = {0.0, 1.0};
  const double lp = hajlasz_norm(two, f2, 1.0, HajlaszMode::convex_program).objective;
  const auto space = line(200);
  std::size_t violations = 0, converged = 0;
  double worst_residual = 0.0, lo = 1e300, hi = 0.0;
  for (const auto& f : standard_family(20, 1, kSeed)) {
    const auto b = sample(space, f);
    const auto ub = hajlasz_norm(space, b, 2.0, HajlaszMode::upper_bound);
    const auto cp = hajlasz_norm(space, b, 2.0, HajlaszMode::convex_program);
    if (cp.objective > ub.objective) ++violations;
    if (cp.converged) ++converged;
    lo = std::min(lo, cp.objective / ub.objective);
    hi = std::max(hi, cp.objective / ub.objective);
    worst_residual = std::max({worst_residual, cp.residual, ub.residual});
  }
  const bool ok = std::abs(lp - 0.5) <= 1e-12 && violations == 0 && worst_residual <= 1e-9;
  return {ok, fmt("two-point LP %.17g; cp/ub in [%.4f, %.4f]; residual max %.2e; solver converged %zu/20", lp, lo, hi,
                   worst_residual, converged)};
}

Outcome diagnostics_ground_truth() {
  const auto bessel = build_grid_space(Domain::half_line(1.0), 1024, WeightSpec::power(2.0), WeightSpec::constant());
  const auto lebesgue = build_grid_space(Domain::half_line(1.0), 1024, WeightSpec::constant(), WeightSpec::constant());
  const auto cfg = default_diagnostics(bessel);
  const auto db = dimension_bounds(bessel, Measure::mu, cfg);
  const auto dl = dimension_bounds(lebesgue, Measure::mu, cfg);
  const double a2 = a2_constant(lebesgue, WeightSpec::constant(), cfg).value;
  const double rh = reverse_holder(lebesgue, cfg, 2.0).value;
  const bool ok = std::abs(db.lower - 1.0) <= 0.25 && std::abs(db.upper - 3.0) <= 0.25 &&
                  std::abs(dl.lower - 1.0) <= 0.25 && std::abs(dl.upper - 1.0) <= 0.25 &&
                  std::abs(a2 - 1.0) <= 1e-12 && std::abs(rh - 1.0) <= 1e-12;
  return {ok, fmt("bessel (%.3f, %.3f); lebesgue (%.3f, %.3f); A2(1)-1 = %.1e; RH(1)-1 = %.1e", db.lower, db.upper,
                  dl.lower, dl.upper, a2 - 1.0, rh - 1.0)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"rank-one commutator [x,H] closed form", rank_one_commutator},
      {"weighted SVD vs adjoint-eigenvalue oracle", weighted_svd_oracle},
      {"Lorentz l^{p,p} reduction", lorentz_reduction},
      {"Osc_1 / Osc_2 band", osc_exponent_band},
      {"ball norm vs adjacent-system sum band", adjacent_family_band},
      {"Osc(mu) / Osc(nu) band under A_inf change of measure", measure_change_band},
      {"S^p commutator / Besov band, d = 1", commutator_besov_band},
      {"S^2 growth and S^4 stability, 2D Riesz", critical_cutoff},
      {"Bessel-Riesz lambda = 0 reduction and contraction", bessel_reduction},
      {"weighted L^2(x^{1/2}) Schatten stability", weighted_stability},
      {"Hajlasz convex program optimality", hajlasz_optimality},
      {"diagnostics ground truth", diagnostics_ground_truth},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2zu  %-52s %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
