#include "schattenlab/hajlasz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "schattenlab/lp.hpp"

namespace schattenlab {

namespace {

// Dense matrix of difference quotients |f_i - f_j| / rho_ij (0 on the diagonal).
std::vector<double> quotients(const MetricMeasureSpace& space, std::span<const double> f) {
  const std::size_t n = space.size();
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double rho = space.distance(i, j);
      if (rho == 0.0) {
        if (f[i] != f[j]) throw std::invalid_argument("hajlasz: coincident points with different values");
        continue;
      }
      g[i * n + j] = g[j * n + i] = std::abs(f[i] - f[j]) / rho;
    }
  return g;
}

// Raise coordinates in index order until every pair constraint holds.
// Values only increase, so constraints fixed earlier stay satisfied.
void repair(std::vector<double>& h, const std::vector<double>& g) {
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    double need = std::max(h[i], 0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) need = std::max(need, g[i * n + j] - h[j]);
    h[i] = need;
  }
}

HajlaszSolution finish(const MetricMeasureSpace& space, std::span<const double> f, std::vector<double> h,
                       double p, HajlaszMode mode, std::string method) {
  HajlaszSolution sol;
  sol.objective = lp_norm(h, space.mu_weights(), p);
  sol.residual = hajlasz_residual(space, f, h);
  sol.gradient = std::move(h);
  sol.mode = mode;
  sol.method = std::move(method);
  return sol;
}

std::vector<double> upper_bound_gradient(const std::vector<double>& g, std::size_t n) {
  std::vector<double> h(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i] = std::max(h[i], 0.5 * g[i * n + j]);
  return h;
}

// Pair constraints h_i + h_j >= g_ij that are not implied by h >= 0.
std::vector<std::pair<std::size_t, std::size_t>> active_pairs(const std::vector<double>& g, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g[i * n + j] > 0.0) pairs.emplace_back(i, j);
  return pairs;
}

bool solve_lp(const MetricMeasureSpace& space, const std::vector<double>& g, std::vector<double>& h,
              std::size_t& pivots) {
  const std::size_t n = space.size();
  const auto pairs = active_pairs(g, n);
  const auto& mu = space.mu_weights();
  // min sum mu_i h_i  s.t. h_i + h_j >= g_ij
  PackingLp lp;
  lp.rows = n;
  lp.cols = pairs.size();
  lp.a.assign(n * pairs.size(), 0.0);
  lp.b = mu;
  lp.c.resize(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    lp.a[pairs[k].first * pairs.size() + k] = 1.0;
    lp.a[pairs[k].second * pairs.size() + k] = 1.0;
    lp.c[k] = g[pairs[k].first * n + pairs[k].second];
  }
  const auto res = solve_packing_lp(lp);
  pivots = res.pivots;
  if (res.status != LpResult::Status::optimal) return false;
  h.assign(res.dual.begin(), res.dual.begin() + static_cast<std::ptrdiff_t>(n));
  return true;
}

// h_i as a function of the accumulated multiplier Lambda_i: the minimiser of
// mu_i h^p - Lambda_i h over h >= 0.
double primal_of(double lambda, double mu, double p) {
  return lambda <= 0.0 ? 0.0 : std::pow(lambda / (p * mu), 1.0 / (p - 1.0));
}

// Log-barrier Newton method for min sum mu_i h_i^p subject to
// h_i + h_j >= g_ij and h > 0, over the points with positive mass.
// The multipliers 1/(t s_ij) of the central path give a Lagrange dual value;
// the solver stops once the relative gap to the primal value is below 1e-6.
bool barrier_newton(const std::vector<double>& g, const std::vector<double>& mu, double p,
                    const std::vector<double>& start, std::vector<double>& h, std::size_t& steps) {
  constexpr std::size_t kMaxSteps = 10000;
  constexpr double kTolerance = 1e-6;
  const std::size_t n = start.size();

  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < n; ++i)
    if (mu[i] > 0.0) live.push_back(i);
  const std::size_t m = live.size();
  std::vector<double> w(m);
  std::vector<std::array<std::size_t, 2>> pairs;
  std::vector<double> rhs;
  for (std::size_t a = 0; a < m; ++a) {
    w[a] = mu[live[a]];
    for (std::size_t b = a + 1; b < m; ++b) {
      const double gab = g[live[a] * n + live[b]];
      if (gab > 0.0) {
        pairs.push_back({a, b});
        rhs.push_back(gab);
      }
    }
  }
  steps = 0;
  if (pairs.empty()) {   // f is constant on the support of mu
    h.assign(n, 0.0);
    return true;
  }

  Eigen::VectorXd x(static_cast<Eigen::Index>(m));
  double top = 0.0;
  for (std::size_t a = 0; a < m; ++a) top = std::max(top, start[live[a]]);
  for (std::size_t a = 0; a < m; ++a) x(static_cast<Eigen::Index>(a)) = start[live[a]] + 1e-3 * top;

  auto objective = [&](const Eigen::VectorXd& v) {
    double s = 0.0;
    for (std::size_t a = 0; a < m; ++a) s += w[a] * std::pow(v(static_cast<Eigen::Index>(a)), p);
    return s;
  };
  // t * objective + barrier; +inf outside the strictly feasible region
  auto merit = [&](const Eigen::VectorXd& v, double t) {
    double s = 0.0;
    for (Eigen::Index a = 0; a < v.size(); ++a) {
      if (!(v(a) > 0.0)) return std::numeric_limits<double>::infinity();
      s -= std::log(v(a));
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const double slack = v(static_cast<Eigen::Index>(pairs[k][0])) + v(static_cast<Eigen::Index>(pairs[k][1])) - rhs[k];
      if (!(slack > 0.0)) return std::numeric_limits<double>::infinity();
      s -= std::log(slack);
    }
    return s + t * objective(v);
  };

  const double barrier_terms = static_cast<double>(pairs.size() + m);
  double t = barrier_terms / objective(x);
  Eigen::VectorXd grad(static_cast<Eigen::Index>(m)), Lam(static_cast<Eigen::Index>(m));
  Eigen::MatrixXd hess(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  while (steps < kMaxSteps) {
    // centering
    for (int inner = 0; inner < 200 && steps < kMaxSteps; ++inner, ++steps) {
      hess.setZero();
      for (Eigen::Index a = 0; a < x.size(); ++a) {
        const double v = x(a);
        const double wa = w[static_cast<std::size_t>(a)];
        grad(a) = t * wa * p * std::pow(v, p - 1.0) - 1.0 / v;
        hess(a, a) = t * wa * p * (p - 1.0) * std::pow(v, p - 2.0) + 1.0 / (v * v);
      }
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto i = static_cast<Eigen::Index>(pairs[k][0]), j = static_cast<Eigen::Index>(pairs[k][1]);
        const double inv = 1.0 / (x(i) + x(j) - rhs[k]);
        const double inv2 = inv * inv;
        grad(i) -= inv;
        grad(j) -= inv;
        hess(i, i) += inv2;
        hess(j, j) += inv2;
        hess(i, j) += inv2;
        hess(j, i) += inv2;
      }
      const Eigen::LLT<Eigen::MatrixXd> llt(hess);
      if (llt.info() != Eigen::Success) return false;
      const Eigen::VectorXd dx = -llt.solve(grad);
      const double decrement = -grad.dot(dx);
      if (decrement <= 1e-10) break;
      const double f0 = merit(x, t);
      double step = 1.0;
      Eigen::VectorXd trial = x + dx;
      double f1 = merit(trial, t);
      while (!(f1 <= f0 - 0.25 * step * decrement) && step > 1e-12) {
        step *= 0.5;
        trial = x + step * dx;
        f1 = merit(trial, t);
      }
      if (!(f1 < f0)) break;   // no further progress at this precision
      x = trial;
    }

    // certificate from lambda_ij = 1 / (t s_ij)
    double dual = 0.0;
    Lam.setZero();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto i = static_cast<Eigen::Index>(pairs[k][0]), j = static_cast<Eigen::Index>(pairs[k][1]);
      const double lambda = 1.0 / (t * (x(i) + x(j) - rhs[k]));
      dual += lambda * rhs[k];
      Lam(i) += lambda;
      Lam(j) += lambda;
    }
    for (std::size_t a = 0; a < m; ++a)
      dual -= (p - 1.0) * w[a] * std::pow(primal_of(Lam(static_cast<Eigen::Index>(a)), w[a], p), p);
    const double primal = objective(x);
    if (primal - dual <= kTolerance * primal) {
      // zero-mass points do not enter the norm; lift them to any feasible value
      h.assign(n, 0.0);
      for (std::size_t a = 0; a < m; ++a) h[live[a]] = x(static_cast<Eigen::Index>(a));
      repair(h, g);
      return true;
    }
    t *= 10.0;
  }
  return false;
}

}  // namespace

double lp_norm(std::span<const double> h, std::span<const double> weights, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
      if (weights[i] > 0.0) m = std::max(m, h[i]);
    return m;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) s += weights[i] * std::pow(h[i], p);
  return std::pow(s, 1.0 / p);
}

double hajlasz_residual(const MetricMeasureSpace& space, std::span<const double> f,
                        std::span<const double> h) {
  double worst = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j)
      worst = std::max(worst, std::abs(f[i] - f[j]) - space.distance(i, j) * (h[i] + h[j]));
  for (double v : h) worst = std::max(worst, -v);
  return worst;
}

HajlaszSolution hajlasz_norm(const MetricMeasureSpace& space, std::span<const double> f, double p,
                             HajlaszMode mode) {
  if (f.size() != space.size()) throw std::invalid_argument("function length mismatch");
  if (!(p >= 1.0)) throw std::invalid_argument("hajlasz_norm: p must lie in [1, inf]");
  if (space.size() > kHajlaszMaxPoints) throw std::invalid_argument("hajlasz_norm: space too large");
  const std::size_t n = space.size();
  const auto g = quotients(space, f);
  auto h0 = upper_bound_gradient(g, n);

  if (mode == HajlaszMode::upper_bound) return finish(space, f, std::move(h0), p, mode, "half-sup");

  std::vector<double> h;
  std::size_t iterations = 0;
  bool ok = false;
  std::string method;
  if (std::isinf(p)) {
    // min max_i h_i over the support of mu: any feasible h has
    // max(h_i, h_j) >= g_ij / 2, and the constant max_ij g_ij / 2 attains it
    const auto& mu = space.mu_weights();
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (mu[i] > 0.0 && mu[j] > 0.0) t = std::max(t, 0.5 * g[i * n + j]);
    h.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (mu[i] > 0.0) h[i] = t;
    repair(h, g);   // lifts null points, which the norm ignores
    ok = true;
    method = "minimax";
  } else if (p == 1.0) {
    ok = solve_lp(space, g, h, iterations);
    method = "simplex";
    if (ok) repair(h, g);   // absorbs round-off so the constraints hold exactly
  } else {
    ok = barrier_newton(g, space.mu_weights(), p, h0, h, iterations);
    method = "barrier-newton";
    // the half-sup point is feasible too; never report anything worse
    if (lp_norm(h, space.mu_weights(), p) > lp_norm(h0, space.mu_weights(), p)) h = h0;
  }
  if (!ok) {
    auto sol = finish(space, f, std::move(h0), p, mode, method + " (fallback: half-sup)");
    sol.converged = false;
    sol.iterations = iterations;
    return sol;
  }
  auto sol = finish(space, f, std::move(h), p, mode, method);
  sol.iterations = iterations;
  return sol;
}

}  // namespace schattenlab
