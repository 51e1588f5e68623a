#include "schattenlab/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schattenlab {

double WeightSpec::evaluate(std::span<const double> x, std::size_t index) const {
  switch (kind) {
    case Kind::constant:
      return 1.0;
    case Kind::power:
      if (axis >= x.size()) throw std::invalid_argument("power weight axis out of range");
      return std::pow(std::abs(x[axis]), exponent);
    case Kind::tabulated:
      if (index >= table.size()) throw std::invalid_argument("tabulated weight too short");
      return table[index];
  }
  return 1.0;
}

std::string WeightSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::constant: os << "constant"; break;
    case Kind::power: os << "power(a=" << exponent << ",axis=" << axis << ")"; break;
    case Kind::tabulated: os << "tabulated(" << table.size() << ")"; break;
  }
  return os.str();
}

double Domain::scale() const {
  double s = 0.0;
  for (std::size_t k = 0; k < dim(); ++k) s = std::max(s, extent(k));
  return s;
}

Domain Domain::interval(double a, double b) { return {Kind::interval, {a}, {b}}; }

Domain Domain::square(double a, double b, std::size_t dim) {
  return {Kind::square, std::vector<double>(dim, a), std::vector<double>(dim, b)};
}

Domain Domain::half_line(double height) { return {Kind::half_line, {0.0}, {height}}; }

Domain Domain::half_space(double a, double b, double height, std::size_t lateral_dims) {
  Domain d{Kind::half_space, std::vector<double>(lateral_dims, a), std::vector<double>(lateral_dims, b)};
  d.lower.push_back(0.0);
  d.upper.push_back(height);
  return d;
}

std::string Domain::describe() const {
  static const char* names[] = {"interval", "square", "half_line", "half_space"};
  std::ostringstream os;
  os << names[static_cast<int>(kind)];
  for (std::size_t k = 0; k < dim(); ++k) os << (k ? "x" : "") << "[" << lower[k] << "," << upper[k] << "]";
  return os.str();
}

MetricMeasureSpace MetricMeasureSpace::from_points(std::size_t dim, std::vector<double> coords,
                                                   std::vector<double> mu, std::vector<double> nu) {
  if (dim == 0 || coords.size() != dim * mu.size() || mu.size() != nu.size())
    throw std::invalid_argument("from_points: inconsistent sizes");
  MetricMeasureSpace s;
  s.dim_ = dim;
  s.coords_ = std::move(coords);
  s.mu_ = std::move(mu);
  s.nu_ = std::move(nu);
  s.validate();
  return s;
}

void MetricMeasureSpace::validate() const {
  for (const auto* w : {&mu_, &nu_}) {
    bool any_positive = false;
    for (double v : *w) {
      if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("weights must be finite and >= 0");
      any_positive = any_positive || v > 0.0;
    }
    if (!any_positive) throw std::invalid_argument("each measure needs a positive weight");
  }
}

double MetricMeasureSpace::distance(std::size_t i, std::size_t j) const {
  double s = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const double d = coords_[i * dim_ + k] - coords_[j * dim_ + k];
    s += d * d;
  }
  return std::sqrt(s);
}

double MetricMeasureSpace::distance_to(std::size_t i, std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const double d = coords_[i * dim_ + k] - x[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double MetricMeasureSpace::total(Measure m) const {
  const auto& w = weights(m);
  return std::accumulate(w.begin(), w.end(), 0.0);
}

std::vector<std::size_t> MetricMeasureSpace::multi_index(std::size_t i) const {
  std::vector<std::size_t> m(dim_);
  for (std::size_t k = dim_; k-- > 0;) {
    m[k] = i % resolution_[k];
    i /= resolution_[k];
  }
  return m;
}

std::size_t MetricMeasureSpace::flat_index(std::span<const std::size_t> multi) const {
  std::size_t i = 0;
  for (std::size_t k = 0; k < dim_; ++k) i = i * resolution_[k] + multi[k];
  return i;
}

std::size_t MetricMeasureSpace::nearest_point(std::span<const double> x) const {
  if (!is_grid()) {
    std::size_t best = 0;
    double best_d = distance_to(0, x);
    for (std::size_t i = 1; i < size(); ++i) {
      const double d = distance_to(i, x);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  }
  std::vector<std::size_t> m(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const double u = (x[k] - domain_.lower[k]) / spacing_[k] - 0.5;
    const double r = std::ceil(u - 0.5);   // ties go to the lower index
    const double hi = static_cast<double>(resolution_[k] - 1);
    m[k] = static_cast<std::size_t>(std::clamp(r, 0.0, hi));
  }
  return flat_index(m);
}

MetricMeasureSpace MetricMeasureSpace::swapped() const {
  MetricMeasureSpace s = *this;
  std::swap(s.mu_, s.nu_);
  return s;
}

MetricMeasureSpace build_grid_space(const Domain& domain, std::span<const std::size_t> resolution,
                                    const WeightSpec& mu, const WeightSpec& nu) {
  const std::size_t dim = domain.dim();
  if (dim == 0 || domain.upper.size() != dim) throw std::invalid_argument("malformed domain");
  if (resolution.size() != dim) throw std::invalid_argument("one resolution per axis required");
  for (std::size_t k = 0; k < dim; ++k) {
    if (resolution[k] < 2) throw std::invalid_argument("resolution must be >= 2 per axis");
    if (!(domain.extent(k) > 0.0)) throw std::invalid_argument("domain extent must be positive");
  }

  MetricMeasureSpace s;
  s.dim_ = dim;
  s.domain_ = domain;
  s.resolution_.assign(resolution.begin(), resolution.end());
  s.spacing_.resize(dim);
  s.cell_size_ = 1.0;
  std::size_t n = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    s.spacing_[k] = domain.extent(k) / static_cast<double>(resolution[k]);
    s.cell_size_ *= s.spacing_[k];
    n *= resolution[k];
  }

  s.coords_.resize(n * dim);
  s.mu_.resize(n);
  s.nu_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto m = s.multi_index(i);
    for (std::size_t k = 0; k < dim; ++k)
      s.coords_[i * dim + k] = domain.lower[k] + (static_cast<double>(m[k]) + 0.5) * s.spacing_[k];
    const auto x = s.point(i);
    const double dmu = mu.evaluate(x, i);
    const double dnu = nu.evaluate(x, i);
    if (!std::isfinite(dmu) || !std::isfinite(dnu))
      throw std::invalid_argument("non-finite density at grid point " + std::to_string(i));
    s.mu_[i] = dmu * s.cell_size_;
    s.nu_[i] = dnu * s.cell_size_;
  }
  s.validate();
  return s;
}

std::vector<std::size_t> ball(const MetricMeasureSpace& space, std::size_t center, double radius) {
  return ball(space, space.point(center), radius);
}

std::vector<std::size_t> ball(const MetricMeasureSpace& space, std::span<const double> center,
                              double radius) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.distance_to(i, center) < radius) out.push_back(i);
  return out;
}

double measure_of(const MetricMeasureSpace& space, std::span<const std::size_t> set, Measure m) {
  const auto& w = space.weights(m);
  double s = 0.0;
  for (auto i : set) s += w[i];
  return s;
}

std::vector<double> evaluate_weight(const MetricMeasureSpace& space, const WeightSpec& w) {
  std::vector<double> out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out[i] = w.evaluate(space.point(i), i);
  return out;
}

}  // namespace schattenlab
