#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace schattenlab {

// Density of a measure (or a multiplier weight) with respect to Lebesgue
// measure on the grid.
struct WeightSpec {
  enum class Kind { constant, power, tabulated };

  Kind kind = Kind::constant;
  double exponent = 0.0;       // power: |x_axis|^exponent
  std::size_t axis = 0;        // power
  std::vector<double> table;   // tabulated: one value per point index

  static WeightSpec constant() { return {}; }
  static WeightSpec power(double exponent, std::size_t axis = 0) {
    WeightSpec w;
    w.kind = Kind::power;
    w.exponent = exponent;
    w.axis = axis;
    return w;
  }
  static WeightSpec tabulated(std::vector<double> values) {
    WeightSpec w;
    w.kind = Kind::tabulated;
    w.table = std::move(values);
    return w;
  }

  // Value at point `index` with coordinates `x`.
  double evaluate(std::span<const double> x, std::size_t index) const;

  std::string describe() const;
};

}  // namespace schattenlab
