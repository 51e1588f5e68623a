#include "schattenlab/functions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace schattenlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const char* kind_name(FunctionSpec::Kind k) {
  switch (k) {
    case FunctionSpec::Kind::constant: return "constant";
    case FunctionSpec::Kind::polynomial: return "polynomial";
    case FunctionSpec::Kind::sinusoid: return "sinusoid";
    case FunctionSpec::Kind::bump_sum: return "bump_sum";
    case FunctionSpec::Kind::smooth_indicator: return "smooth_indicator";
    case FunctionSpec::Kind::random_trig: return "random_trig";
  }
  return "?";
}

FunctionSpec::Kind kind_from(const std::string& s) {
  if (s == "constant") return FunctionSpec::Kind::constant;
  if (s == "polynomial") return FunctionSpec::Kind::polynomial;
  if (s == "sinusoid") return FunctionSpec::Kind::sinusoid;
  if (s == "bump_sum") return FunctionSpec::Kind::bump_sum;
  if (s == "smooth_indicator") return FunctionSpec::Kind::smooth_indicator;
  if (s == "random_trig") return FunctionSpec::Kind::random_trig;
  throw std::invalid_argument("unknown function kind '" + s + "'");
}

}  // namespace

double FunctionSpec::operator()(std::span<const double> x) const {
  switch (kind) {
    case Kind::constant:
      return coeffs.empty() ? 0.0 : coeffs[0];
    case Kind::polynomial: {
      double v = 0.0;
      for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x[axis] + coeffs[k];
      return v;
    }
    case Kind::sinusoid: {
      double arg = phase;
      for (std::size_t a = 0; a < x.size() && a < frequency.size(); ++a) arg += kTwoPi * frequency[a] * x[a];
      return amplitude * std::sin(arg);
    }
    case Kind::bump_sum: {
      double v = 0.0;
      for (std::size_t b = 0; b < centers.size(); ++b) {
        double r2 = 0.0;
        for (std::size_t a = 0; a < x.size(); ++a) r2 += (x[a] - centers[b][a]) * (x[a] - centers[b][a]);
        v += heights[b] * std::exp(-r2 / (2.0 * width * width));
      }
      return v;
    }
    case Kind::smooth_indicator:
      return amplitude / (1.0 + std::exp(-(x[axis] - threshold) / width));
    case Kind::random_trig: {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      double v = 0.0;
      for (std::size_t k = 1; k <= terms; ++k) {
        double arg = kTwoPi * unit(rng);
        for (std::size_t a = 0; a < x.size(); ++a) arg += kTwoPi * static_cast<double>(k) * (unit(rng) - 0.5) * x[a];
        v += amplitude * (2.0 * unit(rng) - 1.0) / static_cast<double>(k) * std::sin(arg);
      }
      return v;
    }
  }
  return 0.0;
}

std::vector<double> sample(const MetricMeasureSpace& space, const FunctionSpec& f) {
  std::vector<double> v(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) v[i] = f(space.point(i));
  return v;
}

std::vector<FunctionSpec> standard_family(std::size_t count, std::size_t dim, std::uint64_t seed) {
  std::vector<FunctionSpec> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t k = 0; k < count; ++k) {
    FunctionSpec f;
    const std::size_t variant = k / 5;
    f.axis = k % dim;
    switch (k % 5) {
      case 0:
        f.kind = FunctionSpec::Kind::polynomial;
        f.coeffs = {0.0, 1.0};
        for (std::size_t d = 0; d < variant; ++d) f.coeffs.push_back(unit(rng) - 0.5);
        break;
      case 1:
        f.kind = FunctionSpec::Kind::sinusoid;
        f.frequency.assign(dim, 0.0);
        f.frequency[f.axis] = 0.5 + static_cast<double>(variant % 3);
        if (dim > 1) f.frequency[(f.axis + 1) % dim] = 0.5 * static_cast<double>(variant % 2);
        f.phase = kTwoPi * unit(rng);
        break;
      case 2: {
        f.kind = FunctionSpec::Kind::bump_sum;
        f.width = 0.15 + 0.1 * unit(rng);
        const std::size_t bumps = 1 + variant % 3;
        for (std::size_t b = 0; b < bumps; ++b) {
          std::vector<double> c(dim);
          for (auto& x : c) x = 0.2 + 0.6 * unit(rng);
          f.centers.push_back(c);
          f.heights.push_back(unit(rng) < 0.5 ? -1.0 : 1.0);
        }
        break;
      }
      case 3:
        f.kind = FunctionSpec::Kind::smooth_indicator;
        f.threshold = 0.3 + 0.4 * unit(rng);
        f.width = 0.05 + 0.05 * unit(rng);
        break;
      default:
        f.kind = FunctionSpec::Kind::random_trig;
        f.terms = 3 + variant % 3;
        f.seed = rng();
        break;
    }
    f.id = std::string(kind_name(f.kind)) + "_" + std::to_string(k);
    out.push_back(std::move(f));
  }
  return out;
}

FunctionSpec function_from_json(const nlohmann::json& j, std::uint64_t default_seed) {
  FunctionSpec f;
  f.kind = kind_from(j.at("kind").get<std::string>());
  f.id = j.value("id", std::string(kind_name(f.kind)));
  f.axis = j.value("axis", std::size_t{0});
  f.amplitude = j.value("amplitude", 1.0);
  f.phase = j.value("phase", 0.0);
  f.width = j.value("width", f.width);
  f.threshold = j.value("threshold", f.threshold);
  f.terms = j.value("terms", f.terms);
  if (j.contains("coeffs")) f.coeffs = j["coeffs"].get<std::vector<double>>();
  if (j.contains("value")) f.coeffs = {j["value"].get<double>()};
  if (j.contains("frequency")) f.frequency = j["frequency"].get<std::vector<double>>();
  if (j.contains("centers")) f.centers = j["centers"].get<std::vector<std::vector<double>>>();
  if (j.contains("heights")) f.heights = j["heights"].get<std::vector<double>>();
  if (f.kind == FunctionSpec::Kind::random_trig) f.seed = j.value("seed", default_seed);
  if (f.kind == FunctionSpec::Kind::bump_sum && f.centers.size() != f.heights.size())
    throw std::invalid_argument("bump_sum: centers and heights differ in length");
  return f;
}

nlohmann::json to_json(const FunctionSpec& f) {
  nlohmann::json j{{"kind", kind_name(f.kind)}, {"id", f.id}};
  switch (f.kind) {
    case FunctionSpec::Kind::constant: j["value"] = f.coeffs.empty() ? 0.0 : f.coeffs[0]; break;
    case FunctionSpec::Kind::polynomial: j["coeffs"] = f.coeffs; j["axis"] = f.axis; break;
    case FunctionSpec::Kind::sinusoid:
      j["frequency"] = f.frequency; j["amplitude"] = f.amplitude; j["phase"] = f.phase; break;
    case FunctionSpec::Kind::bump_sum: j["centers"] = f.centers; j["heights"] = f.heights; j["width"] = f.width; break;
    case FunctionSpec::Kind::smooth_indicator:
      j["axis"] = f.axis; j["threshold"] = f.threshold; j["width"] = f.width; j["amplitude"] = f.amplitude; break;
    case FunctionSpec::Kind::random_trig: j["terms"] = f.terms; j["seed"] = f.seed; j["amplitude"] = f.amplitude; break;
  }
  return j;
}

}  // namespace schattenlab
