#pragma once

// Serial, deliberately naive implementations kept as test oracles and as the
// baseline for the kernel benchmark. They share no code paths with the
// optimised kernels beyond the space's distance function.

#include <span>
#include <vector>

#include "schattenlab/dyadic.hpp"
#include "schattenlab/operators.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab::reference {

// osc by an independent route: data-value scan for r <= 1, bisection on the
// sign of the derivative of c -> sum w |f - c|^r for r > 1.
double osc_bruteforce(std::span<const double> f, std::span<const double> w, double r);

// Osc over B_Q for every cube, with balls found by a full scan.
std::vector<double> ball_oscillations(const MetricMeasureSpace& space, std::span<const double> f,
                                      const DyadicSystem& system, double r, Measure m);

// O(N^3): every ball mass recomputed from scratch.
double besov_adhoc(const MetricMeasureSpace& space, std::span<const double> b, double p, Measure m);
double besov_classical(const MetricMeasureSpace& space, std::span<const double> b, double p, double d,
                       Measure m);

Eigen::MatrixXd kernel_entries(const KernelSpec& kernel, const MetricMeasureSpace& space, bool rowsum_diagonal);

std::vector<double> mb_values(const MetricMeasureSpace& space, std::span<const double> b,
                              std::span<const double> scales);

// Singular values on L^2(W) from the eigenvalues of the weighted adjoint
// composition T* T = W^{-1} T^T W T, sorted nonincreasing.
std::vector<double> weighted_singular_values(const OperatorMatrix& T);

// Direct l^p sum without rearrangement.
double lp_sum(std::span<const double> s, double p);

}  // namespace schattenlab::reference
