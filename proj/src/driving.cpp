#include "loewner/driving.hpp"

#include <algorithm>
#include <cmath>

namespace loewner {

DrivingFunction DrivingFunction::constant(double value) {
  if (!std::isfinite(value)) throw DomainError("constant driving value must be finite");
  return DrivingFunction(ConstantDriving{value});
}

DrivingFunction DrivingFunction::piecewise(std::vector<double> breakpoints,
                                           std::vector<double> values) {
  if (values.size() != breakpoints.size() + 1)
    throw DomainError("piecewise driving needs one more value than breakpoints");
  double prev = 0.0;
  for (double b : breakpoints) {
    if (!(b > prev)) throw DomainError("piecewise breakpoints must be strictly increasing and > 0");
    prev = b;
  }
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("piecewise driving values must be finite");
  return DrivingFunction(PiecewiseConstantDriving{std::move(breakpoints), std::move(values)});
}

DrivingFunction DrivingFunction::power_series(double u0, std::vector<double> coefficients,
                                              double horizon) {
  if (!std::isfinite(u0)) throw DomainError("power-series driving u0 must be finite");
  for (double c : coefficients)
    if (!std::isfinite(c)) throw DomainError("power-series coefficients must be finite");
  if (!(horizon > 0.0)) throw DomainError("power-series validity horizon must be positive");
  return DrivingFunction(PowerSeriesDriving{u0, std::move(coefficients), horizon});
}

double DrivingFunction::operator()(double t) const {
  if (const auto* c = std::get_if<ConstantDriving>(&repr_)) return c->value;
  if (const auto* p = std::get_if<PiecewiseConstantDriving>(&repr_)) {
    // first segment with t < breakpoint; values.back() past the end
    const auto it = std::upper_bound(p->breakpoints.begin(), p->breakpoints.end(), t);
    return p->values[static_cast<size_t>(it - p->breakpoints.begin())];
  }
  const auto& s = std::get<PowerSeriesDriving>(repr_);
  const double tt = std::min(t, s.horizon);
  double acc = 0.0;
  for (auto it = s.coefficients.rbegin(); it != s.coefficients.rend(); ++it) acc = (acc + *it) * tt;
  return s.u0 + acc;
}

std::vector<double> DrivingFunction::jump_times(double T) const {
  std::vector<double> out;
  if (const auto* p = std::get_if<PiecewiseConstantDriving>(&repr_)) {
    for (double b : p->breakpoints)
      if (b < T) out.push_back(b);
  } else if (const auto* s = std::get_if<PowerSeriesDriving>(&repr_)) {
    if (s->horizon < T && !s->coefficients.empty()) out.push_back(s->horizon);
  }
  return out;
}

}  // namespace loewner
