#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "schattenlab/diagnostics.hpp"

using namespace schattenlab;

namespace {

MetricMeasureSpace lebesgue_line(std::size_t n) {
  return build_grid_space(Domain::interval(0.0, 1.0), n, WeightSpec::constant(), WeightSpec::constant());
}

DiagnosticsConfig sample(std::vector<std::size_t> centers, double r0, std::size_t count,
                         double min_ratio = 1.0) {
  DiagnosticsConfig cfg;
  cfg.centers = std::move(centers);
  cfg.radii = DiagnosticsConfig::geometric_radii(r0, 2.0, count);
  cfg.min_scale_ratio = min_ratio;
  return cfg;
}

// Greedy r-separated subset of the contiguous 1D grid ball, counted in closed form.
std::size_t separated_count_1d(const MetricMeasureSpace& s, std::size_t c, double r, double R) {
  const double h = s.spacing()[0];
  std::size_t lo = c, hi = c;
  while (lo > 0 && s.distance(c, lo - 1) < R) --lo;
  while (hi + 1 < s.size() && s.distance(c, hi + 1) < R) ++hi;
  const auto stride = static_cast<std::size_t>(std::ceil(r / h - 1e-9));
  return (hi - lo) / stride + 1;
}

}  // namespace

TEST_CASE("geometric radii") {
  const auto r = DiagnosticsConfig::geometric_radii(0.5, 3.0, 3);
  REQUIRE(r.size() == 3);
  CHECK(r[2] == doctest::Approx(4.5));
}

TEST_CASE("doubling constant of Lebesgue measure on an interval") {
  const auto s = lebesgue_line(256);
  const auto cfg = sample({0, 64, 128}, 4.0 / 256, 5);
  const auto d = doubling_constant(s, Measure::mu, cfg);
  CHECK(d.value >= 2.0);
  CHECK(d.value <= 2.2);
  CHECK(d.skipped == 0);
  const auto serial = doubling_constant(s, Measure::mu, cfg, Exec::serial);
  CHECK(serial.value == d.value);
}

TEST_CASE("balls covering the whole space double trivially") {
  const auto s = lebesgue_line(16);
  DiagnosticsConfig cfg;
  cfg.centers = {0, 7, 15};
  cfg.radii = {2.0, 5.0};
  CHECK(doubling_constant(s, Measure::mu, cfg).value == doctest::Approx(1.0));
}

TEST_CASE("power measure x^2 doubles by about 8 at the wall") {
  const auto s = build_grid_space(Domain::half_line(1.0), 2048, WeightSpec::power(2.0), WeightSpec::constant());
  DiagnosticsConfig cfg;
  cfg.centers = {0};
  cfg.radii = {0.05, 0.1, 0.2};
  const auto d = doubling_constant(s, Measure::mu, cfg);
  CHECK(d.value == doctest::Approx(8.0).epsilon(0.03));
}

TEST_CASE("dimension bounds") {
  SUBCASE("interval") {
    const auto s = lebesgue_line(512);
    const auto b = dimension_bounds(s, Measure::mu, sample({0, 128, 256}, 4.0 / 512, 6, 16.0));
    CHECK(b.lower == doctest::Approx(1.0).epsilon(0.1));
    CHECK(b.upper == doctest::Approx(1.0).epsilon(0.1));
  }
  SUBCASE("square") {
    const auto s = build_grid_space(Domain::square(0.0, 1.0), 64, WeightSpec::constant(), WeightSpec::constant());
    const auto b = dimension_bounds(s, Measure::mu, sample({0, 32 * 64 + 32}, 4.0 / 64, 3, 4.0));
    CHECK(b.lower == doctest::Approx(2.0).epsilon(0.15));
    CHECK(b.upper == doctest::Approx(2.0).epsilon(0.15));
  }
  SUBCASE("Bessel-type measure on the half-line") {
    const auto s = build_grid_space(Domain::half_line(1.0), 1024, WeightSpec::power(2.0), WeightSpec::constant());
    const auto b = dimension_bounds(s, Measure::mu, sample({0, 512}, 4.0 / 1024, 6, 16.0));
    CHECK(b.lower <= b.upper);
    CHECK(b.lower == doctest::Approx(1.0).epsilon(0.15));
    CHECK(b.upper == doctest::Approx(3.0).epsilon(0.1));
  }
}

TEST_CASE("separation exponent matches the closed-form greedy count") {
  const auto s = lebesgue_line(256);
  const auto cfg = sample({0, 100}, 3.0 / 256, 5);
  const auto res = separation_exponent(s, cfg);
  double expect = 0.0;
  for (const auto& smp : res.samples) {
    if (!(smp.R > smp.r)) {
      CHECK(smp.value == 0.0);
      continue;
    }
    const auto n = separated_count_1d(s, smp.center, smp.r, smp.R);
    const double e = std::log(static_cast<double>(n)) / std::log(smp.R / smp.r);
    CHECK(smp.value == doctest::Approx(e).epsilon(1e-12));
    expect = std::max(expect, e);
  }
  CHECK(res.value == doctest::Approx(expect));
  // about 2R/r separated points: exponent 1 + log 2 / log(R/r)
  CHECK(res.value > 1.0);
  CHECK(res.value <= 2.0 + 1e-12);
}

TEST_CASE("reverse Hoelder constant") {
  SUBCASE("constant density") {
    const auto s = lebesgue_line(128);
    CHECK(reverse_holder(s, sample({0, 40, 64}, 0.05, 3), 2.0).value == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("square-root density at the wall") {
    const auto s = build_grid_space(Domain::half_line(1.0), 2048, WeightSpec::constant(), WeightSpec::power(0.5));
    DiagnosticsConfig cfg;
    cfg.centers = {0};
    cfg.radii = {0.25};
    const auto res = reverse_holder(s, cfg, 2.0);
    // direct sums over the ball
    const auto B = ball(s, 0, 0.25);
    double m = 0.0, w1 = 0.0, w2 = 0.0;
    for (auto i : B) {
      const double w = s.nu_weights()[i] / s.mu_weights()[i];
      m += s.mu_weights()[i];
      w1 += w * s.mu_weights()[i];
      w2 += w * w * s.mu_weights()[i];
    }
    CHECK(res.value == doctest::Approx(std::sqrt(w2 / m) / (w1 / m)).epsilon(1e-12));
    CHECK(res.value == doctest::Approx(3.0 / (2.0 * std::sqrt(2.0))).epsilon(0.01));
  }
  SUBCASE("stable across resolutions for x^2") {
    double prev = 0.0;
    for (std::size_t n : {256, 512, 1024}) {
      const auto s = build_grid_space(Domain::half_line(1.0), n, WeightSpec::constant(), WeightSpec::power(2.0));
      DiagnosticsConfig cfg;
      cfg.centers = {0};
      cfg.radii = {0.1, 0.3};
      const double v = reverse_holder(s, cfg, 2.0).value;
      // exact value on [0, R): sqrt(1/5) / (1/3)
      CHECK(v == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(0.01));
      if (prev > 0.0) CHECK(std::abs(v / prev - 1.0) < 0.01);
      prev = v;
    }
  }
}

TEST_CASE("A_infinity witness") {
  SUBCASE("equal measures") {
    const auto s = lebesgue_line(128);
    const auto res = check_ainfty(s, 0.5, sample({0, 64}, 0.05, 3));
    CHECK(res.value >= 0.5 - 1e-12);
    CHECK_FALSE(res.flagged);
  }
  SUBCASE("Bessel measure against Lebesgue") {
    const auto s = build_grid_space(Domain::half_line(1.0), 512, WeightSpec::constant(), WeightSpec::power(1.0));
    const auto res = check_ainfty(s, 0.5, sample({0, 256}, 0.02, 4));
    CHECK(res.value > 0.0);
    CHECK_FALSE(res.flagged);
  }
  SUBCASE("concentrated measure is flagged") {
    std::vector<double> nu(64, 1e-14);
    nu[10] = 1.0;
    const auto s = build_grid_space(Domain::interval(0.0, 1.0), 64, WeightSpec::constant(),
                                    WeightSpec::tabulated(nu));
    const auto res = check_ainfty(s, 0.5, sample({10}, 0.2, 2));
    CHECK(res.flagged);
  }
  SUBCASE("swapping the space swaps the roles") {
    const auto s = build_grid_space(Domain::half_line(1.0), 128, WeightSpec::power(0.5), WeightSpec::power(1.5));
    const auto cfg = sample({0, 64}, 0.05, 3);
    CHECK(check_ainfty(s, 0.3, cfg, Measure::nu).value == check_ainfty(s.swapped(), 0.3, cfg, Measure::mu).value);
  }
}

TEST_CASE("A_2 constant") {
  const auto s = build_grid_space(Domain::half_line(1.0), 512, WeightSpec::constant(), WeightSpec::constant());
  const auto cfg = sample({0, 256}, 0.01, 5);
  CHECK(a2_constant(s, WeightSpec::constant(), cfg).value == doctest::Approx(1.0));

  const double a = a2_constant(s, WeightSpec::power(0.5), cfg).value;
  CHECK(a >= 1.0);
  CHECK(a == doctest::Approx(4.0 / 3.0).epsilon(0.03));
  const auto s2 = build_grid_space(Domain::half_line(1.0), 2048, WeightSpec::constant(), WeightSpec::constant());
  CHECK(a2_constant(s2, WeightSpec::power(0.5), cfg).value == doctest::Approx(a).epsilon(0.02));

  // x^2 is not an A_2 weight: the estimate grows under refinement
  const double g1 = a2_constant(s, WeightSpec::power(2.0), cfg).value;
  const double g2 = a2_constant(s2, WeightSpec::power(2.0), cfg).value;
  CHECK(g2 > 2.0 * g1);

  std::vector<double> w(512, 1.0);
  w[3] = 0.0;
  CHECK_THROWS(a2_constant(s, WeightSpec::tabulated(w), cfg));
}

TEST_CASE("Poincare constant") {
  const auto s = lebesgue_line(128);
  const auto cfg = sample({0, 64}, 0.05, 3);
  SUBCASE("constants have zero oscillation") {
    const std::vector<std::vector<double>> fs{std::vector<double>(128, 3.0)};
    const auto res = poincare_constant(s, 1.0, 1.0, fs, cfg);
    CHECK(res.value == 0.0);
    CHECK_FALSE(res.flagged);
  }
  SUBCASE("linear function: mean deviation is at most half the radius") {
    std::vector<double> f(128);
    for (std::size_t i = 0; i < 128; ++i) f[i] = s.coord(i, 0);
    const std::vector<std::vector<double>> fs{f};
    const auto res = poincare_constant(s, 2.0, 1.0, fs, cfg);
    CHECK(res.value > 0.0);
    for (const auto& smp : res.samples) CHECK(smp.value <= 0.5 * smp.r + s.spacing()[0]);
  }
  CHECK_THROWS(poincare_constant(s, 0.5, 1.0, std::vector<std::vector<double>>{}, cfg));
}

TEST_CASE("serial and parallel diagnostics agree") {
  const auto s = build_grid_space(Domain::square(0.0, 1.0), 24, WeightSpec::power(1.0, 1), WeightSpec::constant());
  const auto cfg = sample({0, 100, 300}, 0.1, 3);
  CHECK(dimension_bounds(s, Measure::mu, cfg, Exec::serial).upper ==
        dimension_bounds(s, Measure::mu, cfg, Exec::parallel).upper);
  CHECK(separation_exponent(s, cfg, Exec::serial).value == separation_exponent(s, cfg, Exec::parallel).value);
  CHECK(a2_constant(s, WeightSpec::power(0.5, 1), cfg, Exec::serial).value ==
        a2_constant(s, WeightSpec::power(0.5, 1), cfg, Exec::parallel).value);
}
