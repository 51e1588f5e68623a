#include "schattenlab/oscnorms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace schattenlab {

void LorentzParams::validate() const {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("Lorentz p must be finite and positive");
  if (!(q > 0.0)) throw std::invalid_argument("Lorentz q must be positive");
}

double lorentz_seq_norm(std::span<const double> s, const LorentzParams& params) {
  params.validate();
  std::vector<double> v(s.begin(), s.end());
  for (double x : v)
    if (x < 0.0 || std::isnan(x)) throw std::invalid_argument("lorentz_seq_norm: negative entry");
  std::sort(v.begin(), v.end(), std::greater<>());

  if (std::isinf(params.q)) {
    double sup = 0.0;
    for (std::size_t n = 0; n < v.size(); ++n)
      sup = std::max(sup, std::pow(static_cast<double>(n + 1), 1.0 / params.p) * v[n]);
    return sup;
  }
  const double expo = 1.0 / params.p - 1.0 / params.q;
  double sum = 0.0;
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (v[n] == 0.0) break;
    const double term = (expo == 0.0 ? 1.0 : std::pow(static_cast<double>(n + 1), expo)) * v[n];
    sum += std::pow(term, params.q);
  }
  return std::pow(sum, 1.0 / params.q);
}

namespace {

double deviation(std::span<const double> f, std::span<const double> w, double c, double r, double total) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (w[i] == 0.0) continue;
    const double d = std::abs(f[i] - c);
    s += w[i] * (r == 1.0 ? d : (r == 2.0 ? d * d : std::pow(d, r)));
  }
  return s / total;
}

double weighted_median(std::span<const double> f, std::span<const double> w, double total) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  double acc = 0.0;
  for (auto i : order) {
    acc += w[i];
    if (acc >= 0.5 * total) return f[i];
  }
  return f[order.back()];
}

}  // namespace

double osc_gathered(std::span<const double> f, std::span<const double> w, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("osc exponent must be positive");
  if (f.size() != w.size()) throw std::invalid_argument("osc: size mismatch");
  double total = 0.0;
  for (double x : w) total += x;
  if (!(total > 0.0)) throw std::domain_error("osc over a set of zero measure");

  if (r == 2.0) {
    double mean = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) mean += w[i] * f[i];
    mean /= total;
    return std::sqrt(deviation(f, w, mean, 2.0, total));
  }
  if (r == 1.0) return deviation(f, w, weighted_median(f, w, total), 1.0, total);

  if (r < 1.0) {
    // x -> |x - c|^r is concave between data values, so the minimum sits on one
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (w[i] == 0.0) continue;
      best = std::min(best, deviation(f, w, f[i], r, total));
    }
    return std::pow(best, 1.0 / r);
  }

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (w[i] == 0.0) continue;
    lo = std::min(lo, f[i]);
    hi = std::max(hi, f[i]);
  }
  if (hi == lo) return 0.0;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  const double tol = 1e-10 * std::max({1.0, std::abs(lo), std::abs(hi)});
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = deviation(f, w, x1, r, total), f2 = deviation(f, w, x2, r, total);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = deviation(f, w, x1, r, total);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = deviation(f, w, x2, r, total);
    }
  }
  return std::pow(std::min(f1, f2), 1.0 / r);
}

double osc(const MetricMeasureSpace& space, std::span<const double> f, std::span<const std::size_t> set,
           double r, Measure m) {
  if (f.size() != space.size()) throw std::invalid_argument("function length mismatch");
  const auto& w = space.weights(m);
  std::vector<double> fv(set.size()), wv(set.size());
  for (std::size_t k = 0; k < set.size(); ++k) {
    fv[k] = f[set[k]];
    wv[k] = w[set[k]];
  }
  return osc_gathered(fv, wv, r);
}

std::vector<double> ball_oscillations(const MetricMeasureSpace& space, std::span<const double> f,
                                      const DyadicSystem& system, double r, Measure m, Exec exec) {
  std::vector<double> out(system.size());
  for_each_index(system.size(), exec, [&](std::size_t id) {
    const auto B = concentric_ball(space, system.cube(id), system.expansion());
    out[id] = osc(space, f, B, r, m);
  });
  return out;
}

std::vector<double> cube_oscillations(const MetricMeasureSpace& space, std::span<const double> f,
                                      const DyadicSystem& system, double r, Measure m, Exec exec) {
  std::vector<double> out(system.size());
  for_each_index(system.size(), exec,
                 [&](std::size_t id) { out[id] = osc(space, f, system.cube(id).points, r, m); });
  return out;
}

double osc_norm(const MetricMeasureSpace& space, std::span<const double> f, const DyadicSystem& system,
                const LorentzParams& params, double r, Measure m, Exec exec) {
  return lorentz_seq_norm(ball_oscillations(space, f, system, r, m, exec), params);
}

double osc_norm(const MetricMeasureSpace& space, std::span<const double> f,
                std::span<const DyadicSystem> family, const LorentzParams& params, double r, Measure m,
                Exec exec) {
  std::vector<double> all;
  for (const auto& sys : family) {
    const auto v = ball_oscillations(space, f, sys, r, m, exec);
    all.insert(all.end(), v.begin(), v.end());
  }
  return lorentz_seq_norm(all, params);
}

double osc_norm_dyadic(const MetricMeasureSpace& space, std::span<const double> f,
                       const DyadicSystem& system, const LorentzParams& params, double r, Measure m,
                       Exec exec) {
  return lorentz_seq_norm(cube_oscillations(space, f, system, r, m, exec), params);
}

double osc_norm_dyadic_sum(const MetricMeasureSpace& space, std::span<const double> f,
                           std::span<const DyadicSystem> family, const LorentzParams& params, double r,
                           Measure m, Exec exec) {
  double s = 0.0;
  for (const auto& sys : family) s += osc_norm_dyadic(space, f, sys, params, r, m, exec);
  return s;
}

}  // namespace schattenlab
