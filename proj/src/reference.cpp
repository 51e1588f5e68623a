#include "schattenlab/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace schattenlab::reference {

namespace {

double objective(std::span<const double> f, std::span<const double> w, double c, double r) {
  double s = 0.0, tot = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += w[i] * std::pow(std::abs(f[i] - c), r);
    tot += w[i];
  }
  return s / tot;
}

}  // namespace

double osc_bruteforce(std::span<const double> f, std::span<const double> w, double r) {
  double tot = 0.0;
  for (double x : w) tot += x;
  if (!(tot > 0.0)) throw std::domain_error("zero measure");
  if (r <= 1.0) {
    double best = std::numeric_limits<double>::infinity();
    for (double c : f) best = std::min(best, objective(f, w, c, r));
    return std::pow(best, 1.0 / r);
  }
  double lo = *std::min_element(f.begin(), f.end());
  double hi = *std::max_element(f.begin(), f.end());
  for (int it = 0; it < 200 && hi > lo; ++it) {
    const double c = 0.5 * (lo + hi);
    double slope = 0.0;   // derivative of the objective up to the factor r
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double d = c - f[i];
      slope += w[i] * (d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0)) * std::pow(std::abs(d), r - 1.0);
    }
    if (slope > 0.0) hi = c;
    else lo = c;
  }
  return std::pow(objective(f, w, 0.5 * (lo + hi), r), 1.0 / r);
}

std::vector<double> ball_oscillations(const MetricMeasureSpace& space, std::span<const double> f,
                                      const DyadicSystem& system, double r, Measure m) {
  const auto& w = space.weights(m);
  std::vector<double> out;
  for (const auto& q : system.cubes()) {
    // nearest grid point to the centre, then a full scan for the ball
    std::size_t z = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < space.size(); ++i) {
      const double d = space.distance_to(i, q.center);
      if (d < best) {
        best = d;
        z = i;
      }
    }
    std::vector<double> fv, wv;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (space.distance(z, i) < system.expansion() * q.side) {
        fv.push_back(f[i]);
        wv.push_back(w[i]);
      }
    }
    out.push_back(osc_bruteforce(fv, wv, r));
  }
  return out;
}

double besov_adhoc(const MetricMeasureSpace& space, std::span<const double> b, double p, Measure m) {
  const auto& w = space.weights(m);
  double s = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i == j) continue;
      const double rho = space.distance(i, j);
      double mass = 0.0;
      for (std::size_t k = 0; k < space.size(); ++k)
        if (space.distance(i, k) < rho) mass += w[k];
      s += std::pow(std::abs(b[i] - b[j]), p) / (mass * mass) * w[i] * w[j];
    }
  }
  return std::pow(s, 1.0 / p);
}

double besov_classical(const MetricMeasureSpace& space, std::span<const double> b, double p, double d,
                       Measure m) {
  const auto& w = space.weights(m);
  double s = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j)
      if (i != j)
        s += std::pow(std::abs(b[i] - b[j]), p) / std::pow(space.distance(i, j), 2.0 * d) * w[i] * w[j];
  return std::pow(s, 1.0 / p);
}

Eigen::MatrixXd kernel_entries(const KernelSpec& kernel, const MetricMeasureSpace& space, bool rowsum_diagonal) {
  const auto n = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j)
        T(i, j) = kernel.evaluate(space.point(static_cast<std::size_t>(i)), space.point(static_cast<std::size_t>(j))) *
                  space.mu_weights()[static_cast<std::size_t>(j)];
  if (rowsum_diagonal)
    for (Eigen::Index i = 0; i < n; ++i) T(i, i) = -T.row(i).sum();
  return T;
}

std::vector<double> mb_values(const MetricMeasureSpace& space, std::span<const double> b,
                              std::span<const double> scales) {
  const auto& nu = space.nu_weights();
  std::vector<double> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (double t : scales) {
      double mass = 0.0, mean = 0.0;
      for (std::size_t j = 0; j < space.size(); ++j)
        if (space.distance(i, j) < t) {
          mass += nu[j];
          mean += nu[j] * b[j];
        }
      if (mass <= 0.0) {
        out.push_back(0.0);
        continue;
      }
      mean /= mass;
      double dev = 0.0;
      for (std::size_t j = 0; j < space.size(); ++j)
        if (space.distance(i, j) < t) dev += nu[j] * std::abs(b[j] - mean);
      out.push_back(dev / mass);
    }
  }
  return out;
}

std::vector<double> weighted_singular_values(const OperatorMatrix& T) {
  const Eigen::VectorXd& w = T.inner_weights;
  const Eigen::MatrixXd adjoint = w.cwiseInverse().asDiagonal() * T.entries.transpose() * w.asDiagonal();
  Eigen::EigenSolver<Eigen::MatrixXd> es(adjoint * T.entries, false);
  std::vector<double> s;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    s.push_back(std::sqrt(std::max(0.0, es.eigenvalues()[k].real())));
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

double lp_sum(std::span<const double> s, double p) {
  double t = 0.0;
  for (double x : s) t += std::pow(x, p);
  return std::pow(t, 1.0 / p);
}

}  // namespace schattenlab::reference
