#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "schattenlab/parallel.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab {

// (sum_{x != y} |b(x)-b(y)|^p / m(B(x, rho(x,y)))^2 m(x) m(y))^{1/p}
// with open balls. The ball around x holds x, so it has positive mass
// whenever the term does not vanish.
double besov_adhoc(const MetricMeasureSpace& space, std::span<const double> b, double p, Measure m,
                   Exec exec = Exec::parallel);

// (sum_{x != y} |b(x)-b(y)|^p / rho(x,y)^{2d} m(x) m(y))^{1/p}
double besov_classical(const MetricMeasureSpace& space, std::span<const double> b, double p, double d,
                       Measure m, Exec exec = Exec::parallel);

// (sum_i |grad f(x_i)|^p cell)^{1/p}; central differences inside, one-sided
// at the boundary. Requires a grid space with uniform nu.
double sobolev_norm_grid(const MetricMeasureSpace& space, std::span<const double> f, double p);

std::vector<double> grid_gradient_norm(const MetricMeasureSpace& space, std::span<const double> f);

// m_b^nu(x,t) on points x scales t with masses t^{-d-1} dt nu(x), where dt
// for a dyadic scale t is the width t of [t, 2t).
struct MbProfile {
  std::vector<double> scales;
  std::vector<double> values;   // point-major: values[i * scales.size() + k]
  std::vector<double> masses;   // same layout
  std::size_t skipped = 0;      // (x,t) with an empty ball
};

MbProfile mb_profile(const MetricMeasureSpace& space, std::span<const double> b, double d,
                     std::span<const double> scales, Exec exec = Exec::parallel);

// sup_{s>0} s nu_d({m_b > s})^{1/d} over the profile.
double mb_weak_norm(const MbProfile& profile, double d);
double mb_weak_norm(const MetricMeasureSpace& space, std::span<const double> b, double d,
                    std::span<const double> scales, Exec exec = Exec::parallel);

// Dyadic scales scale*2^-k from the domain scale down to the largest
// spacing (inclusive).
std::vector<double> dyadic_scales(const MetricMeasureSpace& space);

}  // namespace schattenlab
