#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "schattenlab/parallel.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab {

// Sample over which the empirical sup/inf diagnostics are taken.
struct DiagnosticsConfig {
  std::vector<double> radii;           // positive, ascending
  std::vector<std::size_t> centers;    // point indices
  double tolerance = 1e-9;             // relative slack for flags
  double min_scale_ratio = 1.0;        // dimension_bounds: only pairs with R/r >= this

  // radii = r0 * factor^k for k = 0..count-1
  static std::vector<double> geometric_radii(double r0, double factor, std::size_t count);
  void validate(const MetricMeasureSpace& space) const;
};

// One evaluated (center, r, R) sample; single-radius diagnostics use r == R.
struct DiagnosticSample {
  std::size_t center = 0;
  double r = 0.0;
  double R = 0.0;
  double value = 0.0;
};

struct DiagnosticResult {
  double value = 0.0;
  std::size_t skipped = 0;   // samples excluded (empty measure, degenerate pair, ...)
  bool flagged = false;      // diagnostic-specific failure flag
  std::vector<DiagnosticSample> samples;
};

struct DimensionBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t skipped = 0;
  std::vector<DiagnosticSample> samples;
};

// max over samples of m(B(x,2R)) / m(B(x,R)); empty-measure balls are skipped.
DiagnosticResult doubling_constant(const MetricMeasureSpace& space, Measure m,
                                   const DiagnosticsConfig& cfg, Exec exec = Exec::parallel);

// Empirical lower/upper dimension: min/max of log(m(B(x,R))/m(B(x,r))) / log(R/r).
DimensionBounds dimension_bounds(const MetricMeasureSpace& space, Measure m,
                                 const DiagnosticsConfig& cfg, Exec exec = Exec::parallel);

// max over samples of log(#greedy r-separated subset of B(x,R)) / log(R/r).
DiagnosticResult separation_exponent(const MetricMeasureSpace& space, const DiagnosticsConfig& cfg,
                                     Exec exec = Exec::parallel);

// Reverse Hoelder constant of w = dnu/dmu:
// max over balls of (avg_B w^t dmu)^(1/t) / avg_B w dmu.
DiagnosticResult reverse_holder(const MetricMeasureSpace& space, const DiagnosticsConfig& cfg,
                                double t, Exec exec = Exec::parallel);

// A_infinity witness. For each ball, E collects points in descending order
// of the density of the other measure with respect to `small_in`, subject to
// small_in(E) <= eps * small_in(B). Returns the smallest 1 - other(E)/other(B);
// `flagged` is set when it does not exceed cfg.tolerance.
DiagnosticResult check_ainfty(const MetricMeasureSpace& space, double eps,
                              const DiagnosticsConfig& cfg, Measure small_in = Measure::mu,
                              Exec exec = Exec::parallel);

// [w]_{A_2(mu)} estimate over the sampled balls. Zero weight values throw.
DiagnosticResult a2_constant(const MetricMeasureSpace& space, const WeightSpec& weight,
                             const DiagnosticsConfig& cfg, Exec exec = Exec::parallel);

// Poincare constant for the (1,p) inequality with dilation lambda, measured
// with respect to mu. `lip` is the max axis-neighbour difference quotient.
// Balls with zero denominator and positive numerator are counted as failure
// witnesses (flagged).
DiagnosticResult poincare_constant(const MetricMeasureSpace& space, double p, double lambda,
                                   std::span<const std::vector<double>> functions,
                                   const DiagnosticsConfig& cfg);

// Discrete local Lipschitz constant on a grid space.
std::vector<double> grid_lip(const MetricMeasureSpace& space, std::span<const double> f);

}  // namespace schattenlab
