#include "schattenlab/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace schattenlab {

namespace {

struct Face {
  std::size_t left;    // cell on the lower side (or the only cell for boundary faces)
  std::size_t right;   // cell on the upper side; == left for boundary faces
  double coef_left;    // gradient row: coef_left * u_left + coef_right * u_right
  double coef_right;
  double volume;       // quadrature volume attached to the face
  double weight;
};

}  // namespace

BesselOperator divergence_form_riesz(const MetricMeasureSpace& space,
                                     const std::function<double(std::span<const double>)>& face_weight,
                                     std::size_t component) {
  if (!space.is_grid()) throw std::invalid_argument("divergence_form_riesz: grid space required");
  const Domain& dom = space.domain();
  if (dom.kind != Domain::Kind::half_line && dom.kind != Domain::Kind::half_space)
    throw std::invalid_argument("divergence_form_riesz: half-line or half-space grid required");
  const std::size_t dim = space.dim();
  if (component == 0 || component > dim) throw std::invalid_argument("divergence_form_riesz: bad component");
  const std::size_t wall_axis = dim - 1;
  const std::size_t j = component - 1;
  const std::size_t n = space.size();
  const auto& res = space.resolution();
  const double vol = space.cell_size();

  std::vector<Face> faces;
  std::vector<std::size_t> derivative_face(n);   // right face along axis j of each cell
  std::vector<double> loc(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double h = space.spacing()[k];
    for (std::size_t c = 0; c < n; ++c) {
      auto m = space.multi_index(c);
      const auto x = space.point(c);
      loc.assign(x.begin(), x.end());
      if (m[k] == 0 && k != wall_axis) {
        // Dirichlet on the lower lateral boundary
        loc[k] = x[k] - 0.5 * h;
        faces.push_back({c, c, 2.0 / h, 0.0, 0.5 * vol, face_weight(loc)});
      }
      loc[k] = x[k] + 0.5 * h;
      const double w = face_weight(loc);
      if (k == j) derivative_face[c] = faces.size();
      if (m[k] + 1 < res[k]) {
        ++m[k];
        faces.push_back({c, space.flat_index(m), -1.0 / h, 1.0 / h, vol, w});
      } else {
        faces.push_back({c, c, -2.0 / h, 0.0, 0.5 * vol, w});   // Dirichlet outer cut-off
      }
    }
  }
  for (const auto& f : faces)
    if (!std::isfinite(f.weight) || f.weight < 0.0) throw std::invalid_argument("face weight must be finite, >= 0");

  // A = sum_f vol_f w_f g_f g_f^T
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& f : faces) {
    const double s = f.volume * f.weight;
    const auto l = static_cast<Eigen::Index>(f.left), r = static_cast<Eigen::Index>(f.right);
    A(l, l) += s * f.coef_left * f.coef_left;
    if (f.right != f.left) {
      A(r, r) += s * f.coef_right * f.coef_right;
      A(l, r) += s * f.coef_left * f.coef_right;
      A(r, l) += s * f.coef_left * f.coef_right;
    }
  }

  Eigen::VectorXd m = Eigen::Map<const Eigen::VectorXd>(space.mu_weights().data(), static_cast<Eigen::Index>(n));
  if ((m.array() <= 0.0).any()) throw std::invalid_argument("divergence_form_riesz: mu weights must be positive");
  const Eigen::VectorXd msqrt = m.array().sqrt();
  const Eigen::VectorXd minvsqrt = msqrt.array().inverse();
  const Eigen::MatrixXd S = minvsqrt.asDiagonal() * A * minvsqrt.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S);
  if (eig.info() != Eigen::Success) throw std::runtime_error("divergence_form_riesz: eigendecomposition failed");
  const Eigen::VectorXd& lam = eig.eigenvalues();
  const double radius = std::max(std::abs(lam.minCoeff()), std::abs(lam.maxCoeff()));
  if (lam.minCoeff() < -1e-8 * radius) throw std::runtime_error("divergence_form_riesz: negative eigenvalue");

  BesselOperator out;
  out.min_eigenvalue = lam.minCoeff();
  out.max_eigenvalue = lam.maxCoeff();
  Eigen::VectorXd inv_sqrt(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    if (lam[k] <= 1e-12 * radius) {
      inv_sqrt[k] = 0.0;
      ++out.zero_modes;
    } else {
      inv_sqrt[k] = 1.0 / std::sqrt(lam[k]);
    }
  }
  const Eigen::MatrixXd& V = eig.eigenvectors();
  // L^{-1/2} = M^{-1/2} V diag(lam^{-1/2}) V^T M^{1/2}
  const Eigen::MatrixXd P =
      minvsqrt.asDiagonal() * (V * inv_sqrt.asDiagonal() * V.transpose()) * msqrt.asDiagonal();

  // R = diag(sqrt(vol_f w_f / M_c)) D_j P, D_j on the right face of each cell
  Eigen::MatrixXd R(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t c = 0; c < n; ++c) {
    const auto& f = faces[derivative_face[c]];
    const double scale = std::sqrt(f.volume * f.weight / m[static_cast<Eigen::Index>(c)]);
    Eigen::RowVectorXd row = f.coef_left * P.row(static_cast<Eigen::Index>(f.left));
    if (f.right != f.left) row += f.coef_right * P.row(static_cast<Eigen::Index>(f.right));
    R.row(static_cast<Eigen::Index>(c)) = scale * row;
  }
  out.op.entries = std::move(R);
  out.op.inner_weights = m;
  out.op.label = "riesz_div(j=" + std::to_string(component) + ")";
  return out;
}

BesselOperator bessel_riesz_operator(const BesselSpec& spec, const MetricMeasureSpace& space) {
  if (!(spec.lambda >= 0.0) || !std::isfinite(spec.lambda))
    throw std::invalid_argument("bessel_riesz_operator: lambda must be finite and >= 0");
  if (!space.is_grid()) throw std::invalid_argument("bessel_riesz_operator: grid space required");
  const auto kind = space.domain().kind;
  if (kind != Domain::Kind::half_line && kind != Domain::Kind::half_space)
    throw std::invalid_argument("bessel_riesz_operator: half-line or half-space grid required");
  const std::size_t last = space.dim() - 1;
  const double a = 2.0 * spec.lambda;
  // the space must carry m_lambda as mu
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double expect = std::pow(space.coord(i, last), a) * space.cell_size();
    if (std::abs(space.mu_weights()[i] - expect) > 1e-12 * expect)
      throw std::invalid_argument("bessel_riesz_operator: mu is not the Bessel measure m_lambda");
  }
  auto w = [a, last](std::span<const double> x) { return std::pow(x[last], a); };
  auto out = divergence_form_riesz(space, w, spec.component);
  out.op.label = "bessel_riesz(lambda=" + std::to_string(spec.lambda) + ",j=" + std::to_string(spec.component) + ")";
  return out;
}

}  // namespace schattenlab
