#include "schattenlab/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace schattenlab {

std::size_t SingularValueProfile::numerical_rank(double rel_tol) const {
  if (values.empty() || values.front() == 0.0) return 0;
  const double cut = rel_tol * values.front();
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [&](double s) { return s > cut; }));
}

SingularValueProfile singular_values(const OperatorMatrix& T) {
  T.validate();
  const Eigen::VectorXd ws = T.inner_weights.array().sqrt();
  const Eigen::MatrixXd C = ws.asDiagonal() * T.entries * ws.cwiseInverse().asDiagonal();
  Eigen::VectorXd s;
  if (C.rows() <= 16) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(C);
    s = svd.singularValues();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(C);
    s = svd.singularValues();
  }
  if (!s.allFinite()) throw std::runtime_error("singular_values: decomposition produced non-finite values");
  SingularValueProfile prof;
  prof.values.assign(s.data(), s.data() + s.size());
  std::sort(prof.values.begin(), prof.values.end(), std::greater<>());
  prof.source = T.label;
  prof.inner_product = "L2(inner_weights)";
  return prof;
}

double schatten_norm(const SingularValueProfile& profile, const LorentzParams& params) {
  return lorentz_seq_norm(profile.values, params);
}

PEta p_eta(double eta, double Delta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("p_eta: eta must lie in (0,1]");
  if (!(Delta > 0.0)) throw std::invalid_argument("p_eta: Delta must be positive");
  PEta out;
  out.value = std::max(1.0, 1.0 / (eta / Delta + 0.5));
  if (Delta > 1.0) {
    out.relation = "<d";
    out.holds = out.value < Delta;
  } else {
    out.relation = "=1";
    out.holds = out.value == 1.0;
  }
  return out;
}

}  // namespace schattenlab
