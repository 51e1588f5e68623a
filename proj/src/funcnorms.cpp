#include "schattenlab/funcnorms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace schattenlab {

namespace {

void check_length(const MetricMeasureSpace& space, std::span<const double> f) {
  if (f.size() != space.size()) throw std::invalid_argument("function length mismatch");
}

double ordered_sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

double besov_adhoc(const MetricMeasureSpace& space, std::span<const double> b, double p, Measure m,
                   Exec exec) {
  check_length(space, b);
  if (!(p > 0.0)) throw std::invalid_argument("besov: p must be positive");
  const auto& w = space.weights(m);
  const std::size_t n = space.size();
  std::vector<double> row(n, 0.0);

  for_each_index(n, exec, [&](std::size_t i) {
    if (w[i] == 0.0) return;
    // sort by distance from x_i, prefix sums give m(B(x_i, rho_ij)) for the open ball
    std::vector<std::size_t> order(n);
    std::vector<double> dist(n);
    for (std::size_t j = 0; j < n; ++j) dist[j] = space.distance(i, j);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
      return dist[a] < dist[c] || (dist[a] == dist[c] && a < c);
    });
    double prefix = 0.0;   // mass strictly closer than the current tie group
    double s = 0.0;
    std::size_t k = 0;
    while (k < n) {
      std::size_t e = k;
      double group = 0.0;
      while (e < n && dist[order[e]] == dist[order[k]]) group += w[order[e++]];
      if (dist[order[k]] > 0.0) {
        for (std::size_t t = k; t < e; ++t) {
          const std::size_t j = order[t];
          if (w[j] == 0.0) continue;
          const double diff = std::abs(b[i] - b[j]);
          if (diff == 0.0) continue;
          s += std::pow(diff, p) / (prefix * prefix) * w[i] * w[j];
        }
      }
      prefix += group;
      k = e;
    }
    row[i] = s;
  });
  return std::pow(ordered_sum(row), 1.0 / p);
}

double besov_classical(const MetricMeasureSpace& space, std::span<const double> b, double p, double d,
                       Measure m, Exec exec) {
  check_length(space, b);
  if (!(p > 0.0)) throw std::invalid_argument("besov: p must be positive");
  const auto& w = space.weights(m);
  const std::size_t n = space.size();
  std::vector<double> row(n, 0.0);
  for_each_index(n, exec, [&](std::size_t i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double rho = space.distance(i, j);
      if (rho == 0.0) continue;
      s += std::pow(std::abs(b[i] - b[j]), p) / std::pow(rho, 2.0 * d) * w[i] * w[j];
    }
    row[i] = s;
  });
  return std::pow(ordered_sum(row), 1.0 / p);
}

std::vector<double> grid_gradient_norm(const MetricMeasureSpace& space, std::span<const double> f) {
  if (!space.is_grid()) throw std::invalid_argument("gradient requires a grid space");
  check_length(space, f);
  const auto& res = space.resolution();
  std::vector<double> out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto m = space.multi_index(i);
    double g2 = 0.0;
    for (std::size_t k = 0; k < space.dim(); ++k) {
      const std::size_t mk = m[k];
      const double h = space.spacing()[k];
      std::size_t lo = mk > 0 ? mk - 1 : mk;
      std::size_t hi = mk + 1 < res[k] ? mk + 1 : mk;
      m[k] = lo;
      const double flo = f[space.flat_index(m)];
      m[k] = hi;
      const double fhi = f[space.flat_index(m)];
      m[k] = mk;
      const double g = (fhi - flo) / (static_cast<double>(hi - lo) * h);
      g2 += g * g;
    }
    out[i] = std::sqrt(g2);
  }
  return out;
}

double sobolev_norm_grid(const MetricMeasureSpace& space, std::span<const double> f, double p) {
  if (!space.is_grid()) throw std::invalid_argument("sobolev_norm_grid requires a grid space");
  if (!(p >= 1.0)) throw std::invalid_argument("sobolev_norm_grid: p must be >= 1");
  const auto& nu = space.nu_weights();
  for (double v : nu)
    if (std::abs(v - nu.front()) > 1e-12 * nu.front())
      throw std::invalid_argument("sobolev_norm_grid: nu must be uniform Lebesgue");
  const auto g = grid_gradient_norm(space, f);
  double s = 0.0;
  for (double v : g) s += std::pow(v, p);
  return std::pow(s * space.cell_size(), 1.0 / p);
}

std::vector<double> dyadic_scales(const MetricMeasureSpace& space) {
  if (!space.is_grid()) throw std::invalid_argument("dyadic_scales requires a grid space");
  const double top = space.domain().scale();
  const double cell = *std::max_element(space.spacing().begin(), space.spacing().end());
  std::vector<double> t;
  for (double s = top; s >= cell * (1.0 - 1e-12); s *= 0.5) t.push_back(s);
  return t;
}

MbProfile mb_profile(const MetricMeasureSpace& space, std::span<const double> b, double d,
                     std::span<const double> scales, Exec exec) {
  check_length(space, b);
  for (double t : scales)
    if (!(t > 0.0)) throw std::invalid_argument("mb_profile: scales must be positive");
  const auto& nu = space.nu_weights();
  const std::size_t n = space.size(), ns = scales.size();
  MbProfile prof;
  prof.scales.assign(scales.begin(), scales.end());
  prof.values.assign(n * ns, 0.0);
  prof.masses.assign(n * ns, 0.0);
  std::vector<std::size_t> empty(n, 0);

  for_each_index(n, exec, [&](std::size_t i) {
    if (nu[i] == 0.0) return;
    for (std::size_t k = 0; k < ns; ++k) {
      const double t = scales[k];
      const auto B = ball(space, i, t);
      double mass = 0.0, mean = 0.0;
      for (auto j : B) {
        mass += nu[j];
        mean += nu[j] * b[j];
      }
      if (mass <= 0.0) {
        ++empty[i];
        continue;
      }
      mean /= mass;
      double dev = 0.0;
      for (auto j : B) dev += nu[j] * std::abs(b[j] - mean);
      prof.values[i * ns + k] = dev / mass;
      prof.masses[i * ns + k] = std::pow(t, -d - 1.0) * t * nu[i];
    }
  });
  prof.skipped = std::accumulate(empty.begin(), empty.end(), std::size_t{0});
  return prof;
}

double mb_weak_norm(const MbProfile& profile, double d) {
  if (!(d > 0.0)) throw std::invalid_argument("mb_weak_norm: d must be positive");
  std::vector<std::size_t> order(profile.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
    return profile.values[a] > profile.values[c] || (profile.values[a] == profile.values[c] && a < c);
  });
  // s just below a profile value v picks up every entry >= v
  double best = 0.0, acc = 0.0;
  std::size_t k = 0;
  while (k < order.size()) {
    const double v = profile.values[order[k]];
    if (v <= 0.0) break;
    while (k < order.size() && profile.values[order[k]] == v) acc += profile.masses[order[k++]];
    best = std::max(best, v * std::pow(acc, 1.0 / d));
  }
  return best;
}

double mb_weak_norm(const MetricMeasureSpace& space, std::span<const double> b, double d,
                    std::span<const double> scales, Exec exec) {
  return mb_weak_norm(mb_profile(space, b, d, scales, exec), d);
}

}  // namespace schattenlab
