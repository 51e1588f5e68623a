#include "schattenlab/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace schattenlab {

double Cube::diameter() const { return side * std::sqrt(static_cast<double>(center.size())); }

void DyadicSystem::set_expansion(double c) {
  if (!(c >= 1.0)) throw std::invalid_argument("expansion factor must be >= 1");
  expansion_ = c;
}

DyadicSystem build_dyadic_system(const MetricMeasureSpace& space, int generations,
                                 std::span<const double> shift, std::size_t system_id) {
  const std::size_t dim = space.dim();
  if (generations < 1) throw std::invalid_argument("need at least one generation");
  if (shift.size() != dim) throw std::invalid_argument("one shift component per axis");
  for (double a : shift) {
    const double third = 3.0 * a;
    if (!(a >= 0.0 && a < 1.0) || std::abs(third - std::round(third)) > 1e-12)
      throw std::invalid_argument("shift components must be 0, 1/3 or 2/3");
  }
  if (space.size() == 0) throw std::invalid_argument("empty space");

  const Domain& dom = space.domain();
  std::vector<double> origin(dim, 0.0);
  double scale = 1.0;
  if (space.is_grid()) {
    origin = dom.lower;
    scale = dom.scale();
  } else {
    // bounding box of the cloud, padded so the largest coordinate stays inside [0,1)
    for (std::size_t k = 0; k < dim; ++k) {
      double lo = space.coord(0, k), hi = lo;
      for (std::size_t i = 1; i < space.size(); ++i) {
        lo = std::min(lo, space.coord(i, k));
        hi = std::max(hi, space.coord(i, k));
      }
      origin[k] = lo;
      scale = std::max(scale, (hi - lo) * (1.0 + 1e-9));
    }
  }

  DyadicSystem sys;
  sys.shift_.assign(shift.begin(), shift.end());
  sys.max_generation_ = generations;
  sys.system_id_ = system_id;
  sys.by_generation_.resize(generations + 1);
  sys.owner_.assign(generations + 1, std::vector<std::size_t>(space.size(), kNoCube));

  std::vector<long long> m(dim);
  for (int k = 0; k <= generations; ++k) {
    const double cells = std::ldexp(1.0, k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    std::map<std::vector<long long>, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < space.size(); ++i) {
      for (std::size_t a = 0; a < dim; ++a) {
        const double u = (space.coord(i, a) - origin[a]) / scale;
        m[a] = static_cast<long long>(std::floor(u * cells - sign * shift[a]));
      }
      members[m].push_back(i);
    }
    for (auto& [idx, pts] : members) {
      Cube q;
      q.generation = k;
      q.index = idx;
      q.side = scale / cells;
      q.center.resize(dim);
      for (std::size_t a = 0; a < dim; ++a)
        q.center[a] = origin[a] + q.side * (static_cast<double>(idx[a]) + sign * shift[a] + 0.5);
      q.points = std::move(pts);
      q.system_id = system_id;
      const std::size_t id = sys.cubes_.size();
      for (auto i : q.points) sys.owner_[k][i] = id;
      if (k > 0) {
        q.parent = sys.owner_[k - 1][q.points.front()];
        for (auto i : q.points)
          if (sys.owner_[k - 1][i] != q.parent) throw std::logic_error("dyadic generations do not nest");
        sys.cubes_[q.parent].children.push_back(id);
      }
      sys.by_generation_[k].push_back(id);
      sys.cubes_.push_back(std::move(q));
    }
  }
  return sys;
}

std::vector<DyadicSystem> build_adjacent_family(const MetricMeasureSpace& space, int generations) {
  const std::size_t dim = space.dim();
  const std::size_t count = std::size_t{1} << dim;
  std::vector<DyadicSystem> family;
  family.reserve(count);
  std::vector<double> shift(dim);
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t a = 0; a < dim; ++a) shift[a] = ((mask >> a) & 1u) ? 1.0 / 3.0 : 0.0;
    family.push_back(build_dyadic_system(space, generations, shift, mask));
  }
  return family;
}

std::vector<std::size_t> concentric_ball(const MetricMeasureSpace& space, const Cube& cube, double c) {
  if (!(c >= 1.0)) throw std::invalid_argument("expansion factor must be >= 1");
  const std::size_t z = space.nearest_point(cube.center);
  return ball(space, z, c * cube.side);
}

AdjacencyReport verify_adjacency(std::span<const DyadicSystem> family, const MetricMeasureSpace& space,
                                 std::span<const BallQuery> balls) {
  AdjacencyReport rep;
  for (const auto& q : balls) {
    const auto B = ball(space, q.center, q.radius);
    AdjacencyEntry best;
    best.center = q.center;
    best.radius = q.radius;
    for (std::size_t s = 0; s < family.size(); ++s) {
      const auto& sys = family[s];
      // finest generation first: the first containing cube is the smallest
      for (int k = sys.max_generation(); k >= 0; --k) {
        const std::size_t id = sys.cube_of(k, q.center);
        const bool contains = std::all_of(B.begin(), B.end(),
                                          [&](std::size_t i) { return sys.cube_of(k, i) == id; });
        if (!contains) continue;
        const double ratio = sys.cube(id).diameter() / q.radius;
        if (ratio < best.ratio) {
          best.ratio = ratio;
          best.system = s;
          best.cube = id;
        }
        break;
      }
    }
    if (best.cube == kNoCube) ++rep.failures;
    else rep.max_ratio = std::max(rep.max_ratio, best.ratio);
    rep.entries.push_back(best);
  }
  return rep;
}

nlohmann::json to_json(const DyadicSystem& system) {
  nlohmann::json out;
  out["shift"] = system.shift();
  out["max_generation"] = system.max_generation();
  out["system_id"] = system.system_id();
  auto& gens = out["generations"] = nlohmann::json::array();
  for (int k = 0; k <= system.max_generation(); ++k) {
    nlohmann::json g;
    g["generation"] = k;
    auto& cubes = g["cubes"] = nlohmann::json::array();
    for (auto id : system.generation(k)) {
      const auto& q = system.cube(id);
      cubes.push_back({{"center", q.center}, {"side", q.side}, {"points", q.points.size()}});
    }
    gens.push_back(std::move(g));
  }
  return out;
}

}  // namespace schattenlab
