#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "loewner/driving.hpp"
#include "loewner/series.hpp"

namespace loewner {

// Conjugated Pontryagin costate coordinates (psi_bar_1, ..., psi_bar_n).
// Entry 1 is carried but decoupled: no other row depends on it and it never
// enters the Hamiltonian.
struct AdjointVector {
  int n = 0;
  CVec psi_bar;

  static AdjointVector from(CVec coords);

  const Complex& at(int k) const { return psi_bar[static_cast<size_t>(k) - 1]; }
};

// Sampled joint trajectory of the coefficient system and, when seeded, the
// adjoint and companion systems.  One sample per accepted step, starting at
// t = 0.
struct Trajectory {
  int n = 0;
  std::vector<double> times;
  std::vector<CVec> a_samples;
  std::vector<CVec> psi_samples;        // empty when no adjoint was integrated
  std::vector<CVec> companion_samples;  // empty when no companion was integrated
  double horizon = 0.0;
  double step = 0.0;
  double tail_error_estimate = 0.0;

  bool has_psi() const { return !psi_samples.empty(); }
  bool has_companion() const { return !companion_samples.empty(); }
};

// da/dt = -2 sum_{s=1}^{n-1} exp(-s(t+iu)) A(a)^s a.  Entry 1 is exactly zero.
CVec coefficient_rhs(double t, const CoefficientVector& a, double u_val);

// d(psi_bar)/dt = 2 sum_{s=1}^{n-1} exp(-s(t+iu)) (s+1) (A(a)^T)^s psi_bar.
// Entry n is exactly zero.
CVec adjoint_rhs(double t, const CoefficientVector& a, const AdjointVector& psi, double u_val);

// dq/dt = 2 sum_{s=1}^{n-1} exp(-s(t+iu)) (s+1) A(a)^s q: the companion of the
// adjoint system with the untransposed action.  Entry 1 is exactly zero.
CVec companion_rhs(double t, const CoefficientVector& a, const CVec& q, double u_val);

// Classical fixed-step RK4 over [0, T] from a(0) = (1, 0, ..., 0), jointly
// advancing the adjoint/companion systems when seeds are given.  The mesh is
// split at the driving function's jump times so every stage sees a smooth u.
// Throws IntegrationBlowup if the state turns non-finite.
Trajectory integrate(const DrivingFunction& u, int n, double T, double h,
                     const std::optional<AdjointVector>& psi0 = std::nullopt,
                     const std::optional<CVec>& q0 = std::nullopt);

// Final coefficient state only; same scheme as integrate() without sample
// storage.  Hot path of the extremal search.
CVec integrate_final_coefficients(const DrivingFunction& u, int n, double T, double h);

struct LimitCoefficients {
  CoefficientVector a;
  double tail_error_estimate = 0.0;
  bool converged = false;
};

// a(T) as a stand-in for a(infinity), with the tail bound
// sum_s (2/s) |A^s a(T)|_inf exp(-sT); flags unconverged when the bound
// exceeds tol.
LimitCoefficients extract_limit_coefficients(const Trajectory& traj, double tol = 1e-8);

// CSV export: header row then one row per sample; columns
// t, re_a2, im_a2, ..., re_an, im_an and, when present,
// re_psi2, im_psi2, ..., re_psin, im_psin.
void write_trajectory_csv(const Trajectory& traj, std::ostream& os);

}  // namespace loewner
