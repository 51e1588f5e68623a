#include "schattenlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace schattenlab {

namespace {

struct BallSample {
  std::size_t center;
  double radius;
};

std::vector<BallSample> ball_samples(const DiagnosticsConfig& cfg) {
  std::vector<BallSample> out;
  for (auto c : cfg.centers)
    for (double r : cfg.radii) out.push_back({c, r});
  return out;
}

double weighted_mean(std::span<const std::size_t> set, const std::vector<double>& w,
                     const std::vector<double>& f) {
  double num = 0.0, den = 0.0;
  for (auto i : set) {
    num += w[i] * f[i];
    den += w[i];
  }
  return num / den;
}

}  // namespace

std::vector<double> DiagnosticsConfig::geometric_radii(double r0, double factor, std::size_t count) {
  std::vector<double> r(count);
  double v = r0;
  for (auto& x : r) {
    x = v;
    v *= factor;
  }
  return r;
}

void DiagnosticsConfig::validate(const MetricMeasureSpace& space) const {
  if (radii.empty() || centers.empty()) throw std::invalid_argument("diagnostics sample is empty");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0)) throw std::invalid_argument("radii must be positive");
    if (k > 0 && radii[k] < radii[k - 1]) throw std::invalid_argument("radii must be sorted");
  }
  for (auto c : centers)
    if (c >= space.size()) throw std::invalid_argument("center index out of range");
}

DiagnosticResult doubling_constant(const MetricMeasureSpace& space, Measure m,
                                   const DiagnosticsConfig& cfg, Exec exec) {
  cfg.validate(space);
  const auto samples = ball_samples(cfg);
  std::vector<double> ratio(samples.size(), std::numeric_limits<double>::quiet_NaN());
  for_each_index(samples.size(), exec, [&](std::size_t k) {
    const auto& s = samples[k];
    const double small = measure_of(space, ball(space, s.center, s.radius), m);
    if (small <= 0.0) return;
    ratio[k] = measure_of(space, ball(space, s.center, 2.0 * s.radius), m) / small;
  });

  DiagnosticResult res;
  res.value = 1.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (std::isnan(ratio[k])) {
      ++res.skipped;
      continue;
    }
    res.value = std::max(res.value, ratio[k]);
    res.samples.push_back({samples[k].center, samples[k].radius, 2.0 * samples[k].radius, ratio[k]});
  }
  res.flagged = res.skipped > 0;
  return res;
}

DimensionBounds dimension_bounds(const MetricMeasureSpace& space, Measure m,
                                 const DiagnosticsConfig& cfg, Exec exec) {
  cfg.validate(space);
  const std::size_t nr = cfg.radii.size();
  // measures of every sampled ball, then all admissible (r, R) pairs
  std::vector<double> mass(cfg.centers.size() * nr);
  for_each_index(mass.size(), exec, [&](std::size_t k) {
    mass[k] = measure_of(space, ball(space, cfg.centers[k / nr], cfg.radii[k % nr]), m);
  });

  DimensionBounds out;
  out.lower = std::numeric_limits<double>::infinity();
  out.upper = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < cfg.centers.size(); ++c) {
    for (std::size_t a = 0; a < nr; ++a) {
      for (std::size_t b = a + 1; b < nr; ++b) {
        const double r = cfg.radii[a], R = cfg.radii[b];
        const double ms = mass[c * nr + a], ml = mass[c * nr + b];
        if (!(R > r) || R / r < cfg.min_scale_ratio || ms <= 0.0) {
          ++out.skipped;
          continue;
        }
        const double e = std::log(ml / ms) / std::log(R / r);
        out.lower = std::min(out.lower, e);
        out.upper = std::max(out.upper, e);
        out.samples.push_back({cfg.centers[c], r, R, e});
      }
    }
  }
  if (out.samples.empty()) throw std::invalid_argument("dimension_bounds: no admissible (r, R) pair");
  return out;
}

DiagnosticResult separation_exponent(const MetricMeasureSpace& space, const DiagnosticsConfig& cfg,
                                     Exec exec) {
  cfg.validate(space);
  struct Pair {
    std::size_t center;
    double r, R;
  };
  std::vector<Pair> pairs;
  for (auto c : cfg.centers)
    for (std::size_t a = 0; a < cfg.radii.size(); ++a)
      for (std::size_t b = a; b < cfg.radii.size(); ++b) pairs.push_back({c, cfg.radii[a], cfg.radii[b]});

  std::vector<double> expo(pairs.size(), 0.0);
  for_each_index(pairs.size(), exec, [&](std::size_t k) {
    const auto& pr = pairs[k];
    if (!(pr.R > pr.r)) return;  // R == r: contributes 0
    std::vector<std::size_t> chosen;
    for (auto i : ball(space, pr.center, pr.R)) {
      bool separated = true;
      for (auto j : chosen) {
        if (space.distance(i, j) < pr.r) {
          separated = false;
          break;
        }
      }
      if (separated) chosen.push_back(i);
    }
    expo[k] = std::log(static_cast<double>(chosen.size())) / std::log(pr.R / pr.r);
  });

  DiagnosticResult res;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    res.value = std::max(res.value, expo[k]);
    res.samples.push_back({pairs[k].center, pairs[k].r, pairs[k].R, expo[k]});
  }
  return res;
}

DiagnosticResult reverse_holder(const MetricMeasureSpace& space, const DiagnosticsConfig& cfg,
                                double t, Exec exec) {
  if (!(t > 1.0)) throw std::invalid_argument("reverse_holder: exponent must exceed 1");
  cfg.validate(space);
  const auto& mu = space.mu_weights();
  const auto& nu = space.nu_weights();
  const auto samples = ball_samples(cfg);
  std::vector<double> ratio(samples.size(), std::numeric_limits<double>::quiet_NaN());
  for_each_index(samples.size(), exec, [&](std::size_t k) {
    double m = 0.0, mw = 0.0, mwt = 0.0;
    for (auto i : ball(space, samples[k].center, samples[k].radius)) {
      if (mu[i] <= 0.0) continue;
      const double w = nu[i] / mu[i];
      m += mu[i];
      mw += mu[i] * w;
      mwt += mu[i] * std::pow(w, t);
    }
    if (m <= 0.0 || mw <= 0.0) return;
    ratio[k] = std::pow(mwt / m, 1.0 / t) / (mw / m);
  });

  DiagnosticResult res;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (std::isnan(ratio[k])) {
      ++res.skipped;
      continue;
    }
    res.value = std::max(res.value, ratio[k]);
    res.samples.push_back({samples[k].center, samples[k].radius, samples[k].radius, ratio[k]});
  }
  return res;
}

DiagnosticResult check_ainfty(const MetricMeasureSpace& space, double eps,
                              const DiagnosticsConfig& cfg, Measure small_in, Exec exec) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("check_ainfty: eps must lie in (0,1)");
  cfg.validate(space);
  const auto& a = space.weights(small_in);
  const auto& b = space.weights(small_in == Measure::mu ? Measure::nu : Measure::mu);
  const auto samples = ball_samples(cfg);
  std::vector<double> delta(samples.size(), std::numeric_limits<double>::quiet_NaN());

  for_each_index(samples.size(), exec, [&](std::size_t k) {
    auto set = ball(space, samples[k].center, samples[k].radius);
    const double aB = measure_of(space, set, small_in);
    double bB = 0.0;
    for (auto i : set) bB += b[i];
    if (aB <= 0.0 || bB <= 0.0) return;
    // descending density b/a; zero a-mass with positive b-mass ranks first
    auto density = [&](std::size_t i) {
      return a[i] > 0.0 ? b[i] / a[i] : (b[i] > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    };
    std::stable_sort(set.begin(), set.end(),
                     [&](std::size_t i, std::size_t j) { return density(i) > density(j); });
    const double budget = eps * aB;
    double aE = 0.0, bE = 0.0;
    for (auto i : set) {
      if (aE + a[i] <= budget) {
        aE += a[i];
        bE += b[i];
      }
    }
    delta[k] = 1.0 - bE / bB;
  });

  DiagnosticResult res;
  res.value = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (std::isnan(delta[k])) {
      ++res.skipped;
      continue;
    }
    res.value = std::min(res.value, delta[k]);
    res.samples.push_back({samples[k].center, samples[k].radius, samples[k].radius, delta[k]});
  }
  if (res.samples.empty()) throw std::invalid_argument("check_ainfty: no ball with positive measures");
  res.flagged = res.value <= cfg.tolerance;
  return res;
}

DiagnosticResult a2_constant(const MetricMeasureSpace& space, const WeightSpec& weight,
                             const DiagnosticsConfig& cfg, Exec exec) {
  cfg.validate(space);
  const auto w = evaluate_weight(space, weight);
  for (double v : w)
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("a2_constant: weight must be positive");
  const auto& mu = space.mu_weights();
  const auto samples = ball_samples(cfg);
  std::vector<double> value(samples.size(), std::numeric_limits<double>::quiet_NaN());
  for_each_index(samples.size(), exec, [&](std::size_t k) {
    double m = 0.0, sw = 0.0, sinv = 0.0;
    for (auto i : ball(space, samples[k].center, samples[k].radius)) {
      m += mu[i];
      sw += mu[i] * w[i];
      sinv += mu[i] / w[i];
    }
    if (m <= 0.0) return;
    value[k] = (sw / m) * (sinv / m);
  });

  DiagnosticResult res;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (std::isnan(value[k])) {
      ++res.skipped;
      continue;
    }
    res.value = std::max(res.value, value[k]);
    res.samples.push_back({samples[k].center, samples[k].radius, samples[k].radius, value[k]});
  }
  return res;
}

std::vector<double> grid_lip(const MetricMeasureSpace& space, std::span<const double> f) {
  if (!space.is_grid()) throw std::invalid_argument("grid_lip requires a grid space");
  if (f.size() != space.size()) throw std::invalid_argument("function length mismatch");
  std::vector<double> lip(space.size(), 0.0);
  const auto& res = space.resolution();
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto m = space.multi_index(i);
    for (std::size_t k = 0; k < space.dim(); ++k) {
      const std::size_t mk = m[k];
      for (int step : {-1, 1}) {
        if ((step < 0 && mk == 0) || (step > 0 && mk + 1 == res[k])) continue;
        m[k] = step < 0 ? mk - 1 : mk + 1;
        const double q = std::abs(f[i] - f[space.flat_index(m)]) / space.spacing()[k];
        lip[i] = std::max(lip[i], q);
      }
      m[k] = mk;
    }
  }
  return lip;
}

DiagnosticResult poincare_constant(const MetricMeasureSpace& space, double p, double lambda,
                                   std::span<const std::vector<double>> functions,
                                   const DiagnosticsConfig& cfg) {
  if (!(p >= 1.0) || !(lambda >= 1.0)) throw std::invalid_argument("poincare: need p >= 1, lambda >= 1");
  cfg.validate(space);
  const auto& mu = space.mu_weights();
  DiagnosticResult res;
  for (const auto& f : functions) {
    const auto lip = grid_lip(space, f);
    for (const auto& s : ball_samples(cfg)) {
      const auto B = ball(space, s.center, s.radius);
      const auto LB = ball(space, s.center, lambda * s.radius);
      const double mB = measure_of(space, B, Measure::mu);
      const double mLB = measure_of(space, LB, Measure::mu);
      if (mB <= 0.0 || mLB <= 0.0) {
        ++res.skipped;
        continue;
      }
      const double avg = weighted_mean(B, mu, f);
      double num = 0.0;
      for (auto i : B) num += mu[i] * std::abs(f[i] - avg);
      num /= mB;
      double den = 0.0;
      for (auto i : LB) den += mu[i] * std::pow(lip[i], p);
      den = std::pow(den / mLB, 1.0 / p);
      const double scale = std::max(1.0, std::abs(avg));
      if (den <= 0.0) {
        if (num > cfg.tolerance * scale) {
          res.flagged = true;
          res.value = std::numeric_limits<double>::infinity();
          res.samples.push_back({s.center, s.radius, lambda * s.radius, res.value});
        } else {
          ++res.skipped;
        }
        continue;
      }
      const double ratio = num / den;
      res.value = std::max(res.value, ratio);
      res.samples.push_back({s.center, s.radius, lambda * s.radius, ratio});
    }
  }
  return res;
}

}  // namespace schattenlab
