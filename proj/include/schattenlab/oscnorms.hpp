#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "schattenlab/dyadic.hpp"
#include "schattenlab/parallel.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab {

// Parameters of the Lorentz sequence (quasi-)norm l^{p,q}; q may be infinite.
struct LorentzParams {
  double p = 2.0;
  double q = 2.0;

  static constexpr double inf = std::numeric_limits<double>::infinity();
  void validate() const;
};

// One scalar per space point.
using GridFunction = std::vector<double>;

// l^{p,q} norm with the nonincreasing rearrangement s_0 >= s_1 >= ...:
//   q <  inf: (sum_n ((n+1)^{1/p - 1/q} s_n)^q)^{1/q}
//   q == inf: sup_n (n+1)^{1/p} s_n
// so that l^{p,p} is exactly l^p. Negative entries throw.
double lorentz_seq_norm(std::span<const double> s, const LorentzParams& params);

// inf_c (sum_i w_i |f_i - c|^r / sum_i w_i)^{1/r} on already gathered data.
// r = 2 uses the weighted mean, r = 1 the weighted median, r < 1 a scan over
// the data values, other r a golden-section search on [min f, max f].
double osc_gathered(std::span<const double> f, std::span<const double> w, double r);

// osc_{r,m}(f; E). Throws std::domain_error if m(E) = 0.
double osc(const MetricMeasureSpace& space, std::span<const double> f,
           std::span<const std::size_t> set, double r, Measure m);

// Oscillations over B_Q for every cube of the system (cube-id order).
std::vector<double> ball_oscillations(const MetricMeasureSpace& space, std::span<const double> f,
                                      const DyadicSystem& system, double r, Measure m,
                                      Exec exec = Exec::parallel);

// Oscillations over the cubes themselves (cube-id order).
std::vector<double> cube_oscillations(const MetricMeasureSpace& space, std::span<const double> f,
                                      const DyadicSystem& system, double r, Measure m,
                                      Exec exec = Exec::parallel);

// ||f||_{Osc^{p,q}_r(m)}: l^{p,q} of osc over the concentric balls B_Q, with
// c = system.expansion().
double osc_norm(const MetricMeasureSpace& space, std::span<const double> f, const DyadicSystem& system,
                const LorentzParams& params, double r, Measure m, Exec exec = Exec::parallel);

// Same, with the index set running over every cube of every system.
double osc_norm(const MetricMeasureSpace& space, std::span<const double> f,
                std::span<const DyadicSystem> family, const LorentzParams& params, double r, Measure m,
                Exec exec = Exec::parallel);

// ||f||_{Osc^{p,q}_r(D^m, m)}: l^{p,q} of osc over the cubes of one system.
double osc_norm_dyadic(const MetricMeasureSpace& space, std::span<const double> f,
                       const DyadicSystem& system, const LorentzParams& params, double r, Measure m,
                       Exec exec = Exec::parallel);

// sum over the family of osc_norm_dyadic.
double osc_norm_dyadic_sum(const MetricMeasureSpace& space, std::span<const double> f,
                           std::span<const DyadicSystem> family, const LorentzParams& params, double r,
                           Measure m, Exec exec = Exec::parallel);

}  // namespace schattenlab
