#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "schattenlab/space.hpp"

namespace schattenlab {

// Named test-function generator. Coordinates are used as-is (no rescaling).
struct FunctionSpec {
  enum class Kind { constant, polynomial, sinusoid, bump_sum, smooth_indicator, random_trig };

  Kind kind = Kind::constant;
  std::string id;
  std::size_t axis = 0;                 // polynomial, smooth_indicator
  std::vector<double> coeffs;           // polynomial: sum_k coeffs[k] x^k; constant: {value}
  std::vector<double> frequency;        // sinusoid: wave vector (cycles per unit), one per axis
  double amplitude = 1.0;
  double phase = 0.0;
  std::vector<std::vector<double>> centers;   // bump_sum
  std::vector<double> heights;                // bump_sum
  double width = 0.1;                   // bump_sum sigma, smooth_indicator transition width
  double threshold = 0.5;               // smooth_indicator
  std::size_t terms = 4;                // random_trig
  std::uint64_t seed = 0;               // random_trig

  double operator()(std::span<const double> x) const;
};

std::vector<double> sample(const MetricMeasureSpace& space, const FunctionSpec& f);

// Mixed family of `count` smooth nonconstant functions on a domain of the
// given dimension: polynomials, sinusoids, bump sums, smoothed indicators and
// seeded random trigonometric sums, cycled in that order.
std::vector<FunctionSpec> standard_family(std::size_t count, std::size_t dim, std::uint64_t seed);

FunctionSpec function_from_json(const nlohmann::json& j, std::uint64_t default_seed);
nlohmann::json to_json(const FunctionSpec& f);

}  // namespace schattenlab
