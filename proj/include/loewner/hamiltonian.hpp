#pragma once

#include "loewner/dynamics.hpp"
#include "loewner/series.hpp"

namespace loewner {

// Real trigonometric polynomial P(u) = Re( sum_{k=2}^n c_k exp(-i(k-1)u) ),
// period 2*pi.  c[k-2] holds c_k.
struct TrigPolynomial {
  int n = 0;
  CVec c;

  double eval(double u) const { return derivative(u, 0); }
  // d^order P / du^order in closed form (factor (-i(k-1))^order per term).
  double derivative(double u, int order) const;
  double coeff_scale() const;  // sum_k |c_k|
};

// Mixed partial derivative (d/du)^q (d/dt)^m of the pseudo-Hamiltonian
//   H(t, a, psi_bar, u) = Re{ -2 sum_{s=1}^{n-1} exp(-s(t+iu)) (A^s a)^T psi_bar },
// evaluated in closed form via the factor (-is)^q (-s)^m per term.
// q = m = 0 gives H itself.
double hamiltonian_mixed(double t, const CoefficientVector& a, const AdjointVector& psi,
                         double u_val, int q, int m);

// P(u) = Re( -sum_{k=2}^n sum_{j=1}^{n-k+1} conj(lambda_{j+k-1}) j a_j exp(-i(k-1)u) ).
// Satisfies 2 P(u) = H(0, a0, psi_bar(0), u) with psi_bar(0) the initial
// adjoint value of lemma1_initial_adjoint (cross-module contract).
TrigPolynomial theorem1_polynomial(const FunctionalSpec& lambda, const CoefficientVector& a_inf);

struct TrigMaximum {
  double argmax = 0.0;          // in [0, 2*pi)
  double value = 0.0;           // P(argmax)
  double second_best_gap = 0.0; // value minus the best grid point farther than pi/64 away
};

// Global maximum over [0, 2*pi): 8192-point uniform grid, then bisection on
// P' around the best grid point and a safeguarded Newton polish.  Ties on the
// grid keep the lowest index.
TrigMaximum maximize_trig(const TrigPolynomial& P);

}  // namespace loewner
