#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "schattenlab/space.hpp"

namespace schattenlab {

enum class HajlaszMode { upper_bound, convex_program };

struct HajlaszSolution {
  std::vector<double> gradient;   // h >= 0, one value per point
  double objective = 0.0;         // ||h||_{L^p(mu)}
  HajlaszMode mode = HajlaszMode::upper_bound;
  double residual = 0.0;          // max_{x,y} (|f(x)-f(y)| - rho(x,y)(h(x)+h(y)))_+
  bool converged = true;          // false: solver gave up, upper-bound result returned
  std::size_t iterations = 0;
  std::string method;
};

inline constexpr std::size_t kHajlaszMaxPoints = 2048;

// Hajlasz-Sobolev norm ||f||_{M^{1,p}(mu)} with p in [1, inf] (inf allowed).
// upper_bound: h(x) = 1/2 max_{y != x} |f(x)-f(y)|/rho(x,y).
// convex_program: p = 1 by linear programming, p = inf by the exact minimax
// value max_{x,y} |f(x)-f(y)| / (2 rho(x,y)), 1 < p < inf by a
// log-barrier Newton method until the relative duality gap is below 1e-6
// (at most 10^4 Newton steps). On non-convergence the upper-bound result is
// returned with converged = false.
HajlaszSolution hajlasz_norm(const MetricMeasureSpace& space, std::span<const double> f, double p,
                             HajlaszMode mode);

double hajlasz_residual(const MetricMeasureSpace& space, std::span<const double> f,
                        std::span<const double> h);

double lp_norm(std::span<const double> h, std::span<const double> weights, double p);

}  // namespace schattenlab
