#include <cmath>

#include "doctest.h"
#include "schattenlab/bessel.hpp"
#include "schattenlab/schatten.hpp"

using namespace schattenlab;

namespace {

MetricMeasureSpace bessel_line(std::size_t n, double lambda) {
  return build_grid_space(Domain::half_line(1.0), n, WeightSpec::power(2.0 * lambda), WeightSpec::constant());
}

}  // namespace

TEST_CASE("lambda = 0 is the unweighted divergence-form transform") {
  const auto s = bessel_line(64, 0.0);
  const auto a = bessel_riesz_operator({0.0, 1}, s);
  const auto b = divergence_form_riesz(s, [](std::span<const double>) { return 1.0; }, 1);
  CHECK((a.op.entries - b.op.entries).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(a.zero_modes == 0);
  CHECK(a.min_eigenvalue > 0.0);
}

TEST_CASE("in one dimension the transform is an isometry") {
  for (double lambda : {0.0, 0.3, 1.0}) {
    const auto R = bessel_riesz_operator({lambda, 1}, bessel_line(96, lambda));
    const auto sv = singular_values(R.op);
    CHECK(sv.values.front() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(sv.values.back() == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("on a strip the components are jointly contractive") {
  const double lambda = 0.5;
  const auto s = build_grid_space(Domain::half_space(0.0, 1.0, 1.0), 12, WeightSpec::power(2.0 * lambda, 1),
                                  WeightSpec::constant());
  const auto R1 = bessel_riesz_operator({lambda, 1}, s).op;
  const auto R2 = bessel_riesz_operator({lambda, 2}, s).op;
  CHECK(singular_values(R1).values[0] <= 1.0 + 1e-8);
  CHECK(singular_values(R2).values[0] <= 1.0 + 1e-8);
  // R1* R1 + R2* R2 <= I on L^2(mu), with R* = W^{-1} R^T W. Equality fails
  // only through the Dirichlet faces on the left lateral edge, which no
  // right-face derivative sees.
  const Eigen::VectorXd sw = R1.inner_weights.cwiseSqrt();
  const Eigen::MatrixXd A1 = sw.asDiagonal() * R1.entries * sw.cwiseInverse().asDiagonal();
  const Eigen::MatrixXd A2 = sw.asDiagonal() * R2.entries * sw.cwiseInverse().asDiagonal();
  const Eigen::MatrixXd gap =
      Eigen::MatrixXd::Identity(A1.rows(), A1.cols()) - A1.transpose() * A1 - A2.transpose() * A2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gap);
  CHECK(eig.eigenvalues().minCoeff() >= -1e-10);
  CHECK(eig.eigenvalues().maxCoeff() < 1.0);
}

TEST_CASE("invalid Bessel setups") {
  const auto s = bessel_line(16, 0.5);
  CHECK_THROWS(bessel_riesz_operator({0.25, 1}, s));   // mu carries a different lambda
  CHECK_THROWS(bessel_riesz_operator({-1.0, 1}, s));
  CHECK_THROWS(bessel_riesz_operator({0.5, 2}, s));
  const auto interval = build_grid_space(Domain::interval(0.0, 1.0), 8, WeightSpec::constant(), WeightSpec::constant());
  CHECK_THROWS(divergence_form_riesz(interval, [](std::span<const double>) { return 1.0; }, 1));
  CHECK_THROWS(divergence_form_riesz(s, [](std::span<const double>) { return -1.0; }, 1));
}
