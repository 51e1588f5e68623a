#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schattenlab/diagnostics.hpp"
#include "schattenlab/parallel.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab {

// Off-diagonal kernel K(x, y).
struct KernelSpec {
  enum class Kind { hilbert, riesz, custom };
  using Evaluator = std::function<double(std::span<const double>, std::span<const double>)>;

  Kind kind = Kind::custom;
  std::size_t dimension = 1;
  std::size_t component = 1;   // 1-based axis for Riesz kernels
  Evaluator evaluate;
  std::string name;
};

// K(x,y) = c_d (x_j - y_j) / |x - y|^{d+1},  c_d = Gamma((d+1)/2) / pi^{(d+1)/2}.
KernelSpec riesz_kernel(std::size_t d, std::size_t j);
// 1 / (pi (x - y))
KernelSpec hilbert_kernel();
KernelSpec custom_kernel(std::string name, KernelSpec::Evaluator k);

double riesz_constant(std::size_t d);

// Dense operator on L^2(inner_weights): (T f)_i = sum_j entries(i,j) f_j.
struct OperatorMatrix {
  Eigen::MatrixXd entries;
  Eigen::VectorXd inner_weights;
  std::string label;

  std::size_t size() const { return static_cast<std::size_t>(entries.rows()); }
  void validate() const;
};

enum class DiagonalPolicy { zero, principal_value_rowsum };

// T_ij = K(x_i, x_j) mu_j off the diagonal. principal_value_rowsum sets
// T_ii = -sum_{j != i} T_ij so that T 1 = 0.
OperatorMatrix kernel_matrix(const KernelSpec& kernel, const MetricMeasureSpace& space,
                             DiagonalPolicy policy = DiagonalPolicy::principal_value_rowsum,
                             Exec exec = Exec::parallel);

struct KernelDiagnostics {
  double size_constant = 0.0;          // sup |K(x,y)| mu(B(x, rho(x,y)))
  double holder_constant = 0.0;        // sup of the smoothness quotient at exponent eta
  double nondegeneracy = 0.0;          // inf_(x,r) max_y (|K(x,y)|+|K(y,x)|) mu(B(x,rho))
  bool degenerate = false;
  std::size_t skipped_scales = 0;      // (x,r) without y in [r/2, 2r]
  double eta = 1.0;
};

KernelDiagnostics kernel_diagnostics(const KernelSpec& kernel, const MetricMeasureSpace& space,
                                     const DiagnosticsConfig& cfg, double eta = 1.0);

// C_ij = (b_i - b_j) T_ij; inner weights inherited.
OperatorMatrix commutator(std::span<const double> b, const OperatorMatrix& T, Exec exec = Exec::parallel);
// Same off-diagonal entries, with the diagonal set to the cell self-term of
// the commutator kernel (b(x)-b(y))K(x,y) for Hilbert/Riesz kernels:
//   C_ii = c_d (d_j b)(x_i) k_d h^{1-d} mu_i,  k_d = (1/d) int_{[-1/2,1/2]^d} |u|^{1-d} du,
// with d_j b by central differences. For b(x) = x and the Hilbert kernel this
// gives the exactly rank-one matrix (mu_j / pi). Grids with cubic cells and
// d <= 2 only.
OperatorMatrix commutator(std::span<const double> b, const OperatorMatrix& T, const MetricMeasureSpace& space,
                          const KernelSpec& kernel, Exec exec = Exec::parallel);

// Same entries viewed on L^2(w dmu): inner weights multiplied by w.
OperatorMatrix apply_weight(const OperatorMatrix& T, const MetricMeasureSpace& space, const WeightSpec& w);

}  // namespace schattenlab
