#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "json.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab {

inline constexpr std::size_t kNoCube = std::numeric_limits<std::size_t>::max();

struct Cube {
  int generation = 0;
  std::vector<long long> index;        // lattice index m per axis
  std::vector<double> center;          // geometric centre z_Q
  double side = 0.0;                   // l(Q)
  std::vector<std::size_t> points;     // ascending point indices
  std::size_t parent = kNoCube;
  std::vector<std::size_t> children;
  std::size_t system_id = 0;

  double diameter() const;
};

// Nested half-open binary grids 2^-k ([0,1)^D + m + (-1)^k alpha) in units of
// the domain scale, anchored at the domain's lower corner. Only nonempty
// cubes are kept. The alternating sign makes generations nest whenever
// 3*alpha is an integer, which is why shifts are restricted to {0, 1/3, 2/3}.
class DyadicSystem {
 public:
  const std::vector<Cube>& cubes() const { return cubes_; }
  const Cube& cube(std::size_t id) const { return cubes_[id]; }
  std::size_t size() const { return cubes_.size(); }
  int max_generation() const { return max_generation_; }
  const std::vector<double>& shift() const { return shift_; }
  std::size_t system_id() const { return system_id_; }
  double expansion() const { return expansion_; }
  void set_expansion(double c);

  // Cube ids of a generation, in lexicographic index order.
  std::span<const std::size_t> generation(int k) const { return by_generation_[k]; }
  // Cube of generation k containing point i.
  std::size_t cube_of(int k, std::size_t i) const { return owner_[k][i]; }

 private:
  friend DyadicSystem build_dyadic_system(const MetricMeasureSpace&, int, std::span<const double>,
                                          std::size_t);
  std::vector<Cube> cubes_;
  std::vector<std::vector<std::size_t>> by_generation_;
  std::vector<std::vector<std::size_t>> owner_;
  std::vector<double> shift_;
  int max_generation_ = 0;
  std::size_t system_id_ = 0;
  double expansion_ = 3.0;
};

DyadicSystem build_dyadic_system(const MetricMeasureSpace& space, int generations,
                                 std::span<const double> shift, std::size_t system_id = 0);

inline DyadicSystem build_dyadic_system(const MetricMeasureSpace& space, int generations) {
  std::vector<double> zero(space.dim(), 0.0);
  return build_dyadic_system(space, generations, zero);
}

// The one-third-trick family: shifts alpha in {0, 1/3}^D, 2^D systems.
std::vector<DyadicSystem> build_adjacent_family(const MetricMeasureSpace& space, int generations);

// B_Q = B(z_Q, c l(Q)) with z_Q snapped to the nearest grid point.
std::vector<std::size_t> concentric_ball(const MetricMeasureSpace& space, const Cube& cube, double c);

struct AdjacencyEntry {
  std::size_t center = 0;
  double radius = 0.0;
  std::size_t system = kNoCube;
  std::size_t cube = kNoCube;
  double ratio = std::numeric_limits<double>::infinity();   // diam(Q) / radius
};

struct AdjacencyReport {
  double max_ratio = 0.0;
  std::size_t failures = 0;
  std::vector<AdjacencyEntry> entries;
};

struct BallQuery {
  std::size_t center;
  double radius;
};

// For each ball, the smallest cube (over all systems and generations) whose
// point set contains the ball's point set.
AdjacencyReport verify_adjacency(std::span<const DyadicSystem> family, const MetricMeasureSpace& space,
                                 std::span<const BallQuery> balls);

nlohmann::json to_json(const DyadicSystem& system);

}  // namespace schattenlab
