#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "schattenlab/weights.hpp"

namespace schattenlab {

enum class Measure { mu, nu };

inline const char* to_string(Measure m) { return m == Measure::mu ? "mu" : "nu"; }

// Axis-aligned box. For half-line and half-space strips the last axis is
// (0, upper] and the reflecting wall sits at x_last = 0.
struct Domain {
  enum class Kind { interval, square, half_line, half_space };

  Kind kind = Kind::interval;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dim() const { return lower.size(); }
  double extent(std::size_t axis) const { return upper[axis] - lower[axis]; }
  // Largest side; the generation-0 dyadic side length.
  double scale() const;

  static Domain interval(double a, double b);
  static Domain square(double a, double b, std::size_t dim = 2);
  static Domain half_line(double height);
  // [a,b]^lateral_dims x (0, height]
  static Domain half_space(double a, double b, double height, std::size_t lateral_dims = 1);

  std::string describe() const;
};

// Finite point cloud with the Euclidean metric and two quadrature measures.
// Grid spaces additionally carry the per-axis resolution; point ordering is
// lexicographic in the multi-index with the last axis varying fastest.
class MetricMeasureSpace {
 public:
  // Arbitrary point cloud; coords is row-major (size() x dim).
  static MetricMeasureSpace from_points(std::size_t dim, std::vector<double> coords,
                                        std::vector<double> mu, std::vector<double> nu);

  std::size_t size() const { return mu_.size(); }
  std::size_t dim() const { return dim_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double coord(std::size_t i, std::size_t axis) const { return coords_[i * dim_ + axis]; }
  double distance(std::size_t i, std::size_t j) const;
  double distance_to(std::size_t i, std::span<const double> x) const;

  const std::vector<double>& weights(Measure m) const { return m == Measure::mu ? mu_ : nu_; }
  const std::vector<double>& mu_weights() const { return mu_; }
  const std::vector<double>& nu_weights() const { return nu_; }
  double total(Measure m) const;

  bool is_grid() const { return !resolution_.empty(); }
  const Domain& domain() const { return domain_; }
  const std::vector<std::size_t>& resolution() const { return resolution_; }
  const std::vector<double>& spacing() const { return spacing_; }
  double cell_size() const { return cell_size_; }

  std::vector<std::size_t> multi_index(std::size_t i) const;
  std::size_t flat_index(std::span<const std::size_t> multi) const;
  // Grid point nearest to an arbitrary location (clamped into the grid); ties
  // go to the lower index.
  std::size_t nearest_point(std::span<const double> x) const;

  // Same space with the roles of mu and nu exchanged.
  MetricMeasureSpace swapped() const;

 private:
  friend MetricMeasureSpace build_grid_space(const Domain&, std::span<const std::size_t>,
                                             const WeightSpec&, const WeightSpec&);
  MetricMeasureSpace() = default;
  void validate() const;

  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::vector<double> mu_;
  std::vector<double> nu_;
  Domain domain_;
  std::vector<std::size_t> resolution_;
  std::vector<double> spacing_;
  double cell_size_ = 0.0;
};

// Uniform cell-centred grid on `domain`; weights are density x cell volume.
// Throws std::invalid_argument for resolution < 2 or a non-finite density.
MetricMeasureSpace build_grid_space(const Domain& domain, std::span<const std::size_t> resolution,
                                    const WeightSpec& mu, const WeightSpec& nu);

inline MetricMeasureSpace build_grid_space(const Domain& domain, std::size_t n_per_axis,
                                           const WeightSpec& mu, const WeightSpec& nu) {
  std::vector<std::size_t> res(domain.dim(), n_per_axis);
  return build_grid_space(domain, res, mu, nu);
}

// Open ball: indices i with distance(center, i) < radius, ascending.
std::vector<std::size_t> ball(const MetricMeasureSpace& space, std::size_t center, double radius);
std::vector<std::size_t> ball(const MetricMeasureSpace& space, std::span<const double> center,
                              double radius);

double measure_of(const MetricMeasureSpace& space, std::span<const std::size_t> set, Measure m);

// Per-point evaluation of a weight on the space.
std::vector<double> evaluate_weight(const MetricMeasureSpace& space, const WeightSpec& w);

}  // namespace schattenlab
