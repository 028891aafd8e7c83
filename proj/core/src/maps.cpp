#include "circlespec/maps.hpp"

#include <cmath>

#include "circlespec/angle.hpp"
#include "circlespec/errors.hpp"

namespace circlespec {

namespace {

double param(const ParamMap& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw config_error("missing map parameter '" + key + "'");
  return it->second;
}

std::map<std::string, MapFamily>& registry() {
  static std::map<std::string, MapFamily> families = [] {
    std::map<std::string, MapFamily> m;
    m["sine-circle"] = MapFamily{
        [](double x, const ParamMap& p) { return x + 1.0 - param(p, "b") * std::sin(x); },
        [](double x, const ParamMap& p) { return 1.0 - param(p, "b") * std::cos(x); },
        [](const ParamMap& p) {
          double b = param(p, "b");
          if (!std::isfinite(b)) throw config_error("sine-circle: b must be finite");
        }};
    return m;
  }();
  return families;
}

const MapFamily& lookup(const CircleMapSpec& map) {
  auto& reg = registry();
  auto it = reg.find(map.family);
  if (it == reg.end()) throw config_error("unknown map family '" + map.family + "'");
  return it->second;
}

}  // namespace

CircleMapSpec CircleMapSpec::sine_circle(double b) {
  CircleMapSpec spec{"sine-circle", {{"b", b}}};
  lookup(spec).validate(spec.params);
  return spec;
}

void register_family(const std::string& name, MapFamily family) {
  registry()[name] = std::move(family);
}

double lift(const CircleMapSpec& map, double x) {
  return lookup(map).lift(x, map.params);
}

double eval(const CircleMapSpec& map, double x) {
  return reduce_angle(lift(map, x));
}

double deriv(const CircleMapSpec& map, double x) {
  return lookup(map).deriv(x, map.params);
}

IterateResult iterate(const CircleMapSpec& map, double x, int p) {
  if (p < 0) throw config_error("iterate: p must be nonnegative");
  const MapFamily& fam = lookup(map);
  double d = 1.0;
  for (int k = 0; k < p; ++k) {
    d *= fam.deriv(x, map.params);
    x = fam.lift(x, map.params);
  }
  return {reduce_angle(x), d};
}

NoiseSpec NoiseSpec::constant(double value) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw config_error("constant noise profile requires a positive value");
  return NoiseSpec{"constant", {{"value", value}}, value, value};
}

NoiseSpec NoiseSpec::cosine(double base, double amp) {
  if (!(base > std::abs(amp)))
    throw config_error("cosine noise profile requires base > |amp|");
  return NoiseSpec{"cosine", {{"base", base}, {"amp", amp}},
                   base - std::abs(amp), base + std::abs(amp)};
}

double NoiseSpec::operator()(double x) const {
  if (profile == "constant") return params.at("value");
  if (profile == "cosine") return params.at("base") + params.at("amp") * std::cos(x);
  throw config_error("unknown noise profile '" + profile + "'");
}

}  // namespace circlespec
