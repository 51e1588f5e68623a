#include "schattenlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace schattenlab {

double riesz_constant(std::size_t d) {
  const double h = 0.5 * static_cast<double>(d + 1);
  return std::tgamma(h) / std::pow(std::numbers::pi, h);
}

KernelSpec riesz_kernel(std::size_t d, std::size_t j) {
  if (d == 0 || j == 0 || j > d) throw std::invalid_argument("riesz_kernel: need 1 <= j <= d");
  KernelSpec k;
  k.kind = d == 1 ? KernelSpec::Kind::hilbert : KernelSpec::Kind::riesz;
  k.dimension = d;
  k.component = j;
  const double c = riesz_constant(d);
  const double expo = static_cast<double>(d + 1);
  k.evaluate = [c, d, j, expo](std::span<const double> x, std::span<const double> y) {
    if (x.size() != d || y.size() != d) throw std::invalid_argument("riesz kernel: dimension mismatch");
    double r2 = 0.0;
    for (std::size_t a = 0; a < d; ++a) r2 += (x[a] - y[a]) * (x[a] - y[a]);
    const double r = std::sqrt(r2);
    return c * (x[j - 1] - y[j - 1]) / (d == 1 ? r * r : std::pow(r, expo));
  };
  k.name = d == 1 ? "hilbert" : "riesz(d=" + std::to_string(d) + ",j=" + std::to_string(j) + ")";
  return k;
}

KernelSpec hilbert_kernel() { return riesz_kernel(1, 1); }

KernelSpec custom_kernel(std::string name, KernelSpec::Evaluator k) {
  KernelSpec spec;
  spec.kind = KernelSpec::Kind::custom;
  spec.evaluate = std::move(k);
  spec.name = std::move(name);
  return spec;
}

void OperatorMatrix::validate() const {
  if (entries.rows() != entries.cols() || entries.rows() != inner_weights.size())
    throw std::invalid_argument("operator: shape mismatch");
  if (!entries.allFinite()) throw std::invalid_argument("operator: non-finite entries");
  if ((inner_weights.array() <= 0.0).any()) throw std::invalid_argument("operator: inner weights must be > 0");
}

OperatorMatrix kernel_matrix(const KernelSpec& kernel, const MetricMeasureSpace& space, DiagonalPolicy policy,
                             Exec exec) {
  const std::size_t n = space.size();
  const auto& mu = space.mu_weights();
  OperatorMatrix T;
  T.entries.setZero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  T.inner_weights = Eigen::Map<const Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(n));
  T.label = kernel.name;
  std::vector<int> bad(n, 0);

  for_each_index(n, exec, [&](std::size_t i) {
    const auto r = static_cast<Eigen::Index>(i);
    double rowsum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double k = kernel.evaluate(space.point(i), space.point(j));
      if (!std::isfinite(k)) {
        bad[i] = 1;
        return;
      }
      const double v = k * mu[j];
      T.entries(r, static_cast<Eigen::Index>(j)) = v;
      rowsum += v;
    }
    if (policy == DiagonalPolicy::principal_value_rowsum) T.entries(r, r) = -rowsum;
  });
  if (std::any_of(bad.begin(), bad.end(), [](int v) { return v != 0; }))
    throw std::invalid_argument("kernel_matrix: non-finite kernel value");
  return T;
}

KernelDiagnostics kernel_diagnostics(const KernelSpec& kernel, const MetricMeasureSpace& space,
                                     const DiagnosticsConfig& cfg, double eta) {
  constexpr std::size_t kMaxTargets = 64;
  constexpr std::size_t kMaxProbes = 16;
  cfg.validate(space);
  const auto& mu = space.mu_weights();
  const std::size_t n = space.size();

  KernelDiagnostics out;
  out.eta = eta;
  out.nondegeneracy = std::numeric_limits<double>::infinity();

  for (auto x : cfg.centers) {
    std::vector<double> dist(n);
    for (std::size_t j = 0; j < n; ++j) dist[j] = space.distance(x, j);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
    });
    // open-ball mass mu(B(x, dist[j])) for every j
    std::vector<double> ball_mass(n);
    double prefix = 0.0;
    for (std::size_t k = 0; k < n;) {
      std::size_t e = k;
      double group = 0.0;
      while (e < n && dist[order[e]] == dist[order[k]]) group += mu[order[e++]];
      for (std::size_t t = k; t < e; ++t) ball_mass[order[t]] = prefix;
      prefix += group;
      k = e;
    }

    for (double r : cfg.radii) {
      std::vector<std::size_t> annulus;
      for (std::size_t j = 0; j < n; ++j)
        if (j != x && dist[j] >= 0.5 * r && dist[j] <= 2.0 * r) annulus.push_back(j);
      if (annulus.empty()) {
        ++out.skipped_scales;
        continue;
      }
      const std::size_t stride = std::max<std::size_t>(1, annulus.size() / kMaxTargets);
      double best = 0.0;
      for (std::size_t a = 0; a < annulus.size(); a += stride) {
        const std::size_t y = annulus[a];
        const double kxy = kernel.evaluate(space.point(x), space.point(y));
        const double kyx = kernel.evaluate(space.point(y), space.point(x));
        const double mB = ball_mass[y];
        out.size_constant = std::max(out.size_constant, std::abs(kxy) * mB);
        best = std::max(best, (std::abs(kxy) + std::abs(kyx)) * mB);

        // probes x' with rho(x,x') <= rho(x,y)/4, nearest first
        std::size_t probes = 0;
        for (std::size_t t = 1; t < n && probes < kMaxProbes; ++t) {
          const std::size_t xp = order[t];
          if (dist[xp] > 0.25 * dist[y]) break;
          if (xp == y || dist[xp] == 0.0) continue;
          ++probes;
          const double diff = std::abs(kxy - kernel.evaluate(space.point(xp), space.point(y))) +
                              std::abs(kyx - kernel.evaluate(space.point(y), space.point(xp)));
          const double q = diff * mB / std::pow(dist[xp] / dist[y], eta);
          out.holder_constant = std::max(out.holder_constant, q);
        }
      }
      out.nondegeneracy = std::min(out.nondegeneracy, best);
    }
  }
  if (std::isinf(out.nondegeneracy)) out.nondegeneracy = 0.0;
  out.degenerate = out.nondegeneracy <= cfg.tolerance;
  return out;
}

OperatorMatrix commutator(std::span<const double> b, const OperatorMatrix& T, Exec exec) {
  const std::size_t n = T.size();
  if (b.size() != n) throw std::invalid_argument("commutator: multiplier length mismatch");
  OperatorMatrix C;
  C.entries.resize(T.entries.rows(), T.entries.cols());
  C.inner_weights = T.inner_weights;
  C.label = "[b," + T.label + "]";
  // column-major storage: one column per task
  for_each_index(n, exec, [&](std::size_t j) {
    const auto c = static_cast<Eigen::Index>(j);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      C.entries(r, c) = (b[i] - b[j]) * T.entries(r, c);
    }
  });
  return C;
}

namespace {

// (1/d) int_{[-1/2,1/2]^d} |u|^{1-d} du
double cell_moment(std::size_t d) {
  if (d == 1) return 1.0;
  if (d == 2) return 2.0 * std::log(1.0 + std::sqrt(2.0));
  throw std::invalid_argument("commutator cell term: only d <= 2 is supported");
}

}  // namespace

OperatorMatrix commutator(std::span<const double> b, const OperatorMatrix& T, const MetricMeasureSpace& space,
                          const KernelSpec& kernel, Exec exec) {
  OperatorMatrix C = commutator(b, T, exec);
  if (kernel.kind == KernelSpec::Kind::custom) throw std::invalid_argument("commutator cell term: kernel has no known limit");
  if (!space.is_grid() || space.size() != T.size() || space.dim() != kernel.dimension)
    throw std::invalid_argument("commutator cell term: needs the grid the kernel lives on");
  const auto& h = space.spacing();
  for (double s : h)
    if (std::abs(s - h[0]) > 1e-12 * h[0]) throw std::invalid_argument("commutator cell term: cells must be cubes");
  const std::size_t d = space.dim();
  const std::size_t axis = kernel.component - 1;
  const std::size_t n_axis = space.resolution()[axis];
  const double factor = riesz_constant(d) * cell_moment(d) * std::pow(h[0], 1.0 - static_cast<double>(d));
  const auto& mu = space.mu_weights();
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto m = space.multi_index(i);
    const std::size_t k = m[axis];
    const std::size_t lo = k == 0 ? k : k - 1, hi = k + 1 == n_axis ? k : k + 1;
    m[axis] = lo;
    const double b_lo = b[space.flat_index(m)];
    m[axis] = hi;
    const double b_hi = b[space.flat_index(m)];
    const double db = (b_hi - b_lo) / (static_cast<double>(hi - lo) * h[0]);
    C.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = factor * db * mu[i];
  }
  return C;
}

OperatorMatrix apply_weight(const OperatorMatrix& T, const MetricMeasureSpace& space, const WeightSpec& w) {
  if (space.size() != T.size()) throw std::invalid_argument("apply_weight: size mismatch");
  const auto values = evaluate_weight(space, w);
  OperatorMatrix out = T;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i]))
      throw std::invalid_argument("apply_weight: weight must be positive");
    out.inner_weights[static_cast<Eigen::Index>(i)] *= values[i];
  }
  out.label = T.label + " on L2(" + w.describe() + ")";
  return out;
}

}  // namespace schattenlab
