#pragma once

#include <variant>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

struct ConstantDriving {
  double value = 0.0;
};

// u(t) = values[i] on [breakpoints[i-1], breakpoints[i]) with the convention
// breakpoints[-1] = 0; values.back() holds beyond the last breakpoint.
// Right-continuous at the jumps.
struct PiecewiseConstantDriving {
  std::vector<double> breakpoints;  // strictly increasing, all > 0
  std::vector<double> values;       // size == breakpoints.size() + 1
};

// u(t) = u0 + sum_{m=1}^{M} coefficients[m-1] t^m for t <= horizon; frozen at
// the horizon value beyond it so evaluation is defined for every t >= 0.
struct PowerSeriesDriving {
  double u0 = 0.0;
  std::vector<double> coefficients;
  double horizon = 0.0;
};

// Real-valued control u(t) for the Loewner equation.
class DrivingFunction {
public:
  using Repr = std::variant<ConstantDriving, PiecewiseConstantDriving, PowerSeriesDriving>;

  static DrivingFunction constant(double value);
  static DrivingFunction piecewise(std::vector<double> breakpoints, std::vector<double> values);
  static DrivingFunction power_series(double u0, std::vector<double> coefficients, double horizon);

  double operator()(double t) const;

  // Times in (0, T) where u is not smooth (piecewise jumps, the power-series
  // freeze point).  The integrator splits its mesh there so no Runge-Kutta
  // stage ever straddles a discontinuity.
  std::vector<double> jump_times(double T) const;

  const Repr& raw() const { return repr_; }

private:
  explicit DrivingFunction(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

}  // namespace loewner
