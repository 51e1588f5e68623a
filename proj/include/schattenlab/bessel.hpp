#pragma once

#include <cstddef>
#include <functional>

#include "schattenlab/operators.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab {

struct BesselSpec {
  double lambda = 0.0;
  std::size_t component = 1;   // 1-based; the last axis is the weighted one
};

struct BesselOperator {
  OperatorMatrix op;
  std::size_t zero_modes = 0;   // eigenvalues of L treated as zero (pseudo-inverse)
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

// Riesz-type transform D_j L^{-1/2} for L = -w^{-1} div(w grad) on a
// cell-centred grid of a half-line or half-space strip, where w is the
// density of mu evaluated at cell faces. Neumann at the wall x_last = 0,
// Dirichlet on every other boundary face. L is diagonalised in the mu inner
// product through M^{-1/2} A M^{-1/2}. The face derivative D_j (right faces
// of each cell) is mapped back to cells isometrically, so the result is a
// contraction on L^2(mu) and an isometry when j is the only axis.
BesselOperator divergence_form_riesz(const MetricMeasureSpace& space,
                                     const std::function<double(std::span<const double>)>& face_weight,
                                     std::size_t component);

// Bessel-Riesz transform R_{lambda,j} with w = x_last^{2 lambda}. The space's
// mu weights must be the Bessel measure m_lambda on the grid.
BesselOperator bessel_riesz_operator(const BesselSpec& spec, const MetricMeasureSpace& space);

}  // namespace schattenlab
