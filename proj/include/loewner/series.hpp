#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Truncated Taylor coefficients (a_1, ..., a_n) of a normalized univalent
// function f(z) = z + a_2 z^2 + ...; a_1 = 1 always.  Stored zero-based:
// a[k-1] holds the mathematical a_k.
struct CoefficientVector {
  int n = 0;
  CVec a;

  // Validates n >= 2 and a_1 == 1 exactly.
  static CoefficientVector from(CVec coeffs);

  const Complex& at(int k) const { return a[static_cast<size_t>(k) - 1]; }
};

// Coefficients (lambda_2, ..., lambda_n) of the linear functional
// L(f) = sum_{k=2}^n conj(lambda_k) a_k.  Stored zero-based: lambda[k-2]
// holds the mathematical lambda_k.  The nondegeneracy lambda_n != 0 is
// enforced at API boundaries (config ingestion, checked factory), not on the
// aggregate itself: blends of two admissible functionals may legitimately
// have a vanishing top coefficient at interior parameters.
struct FunctionalSpec {
  int n = 0;
  CVec lambda;

  // Validates size == n-1, n >= 2 and lambda_n != 0.
  static FunctionalSpec from(int n, CVec lam);

  const Complex& at(int k) const { return lambda[static_cast<size_t>(k) - 2]; }
};

// Rotation angle beta of f(z) -> exp(-i beta) f(exp(i beta) z), reduced to
// [0, 2*pi).
struct RotationAngle {
  double beta = 0.0;

  static RotationAngle of(double raw);
};

namespace detail {

// In-place w <- A(a) w with the strictly lower triangular Toeplitz action
// (A w)_i = sum_{j=1}^{i-1} a_{i-j} w_j (1-based).  Scans downward so the
// update never reads an already-overwritten entry.
inline void shift_down_inplace(std::span<const Complex> a, std::span<Complex> w) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    Complex acc{};
    for (int j = 0; j < i; ++j) acc += a[static_cast<size_t>(i - 1 - j)] * w[static_cast<size_t>(j)];
    w[static_cast<size_t>(i)] = acc;
  }
}

// In-place w <- A(a)^T w, i.e. (A^T w)_i = sum_{j=i+1}^{n} a_{j-i} w_j.
// Scans upward for the same aliasing reason.
inline void shift_up_inplace(std::span<const Complex> a, std::span<Complex> w) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    Complex acc{};
    for (int j = i + 1; j < n; ++j) acc += a[static_cast<size_t>(j - i - 1)] * w[static_cast<size_t>(j)];
    w[static_cast<size_t>(i)] = acc;
  }
}

// x^p for integer p >= 0 by repeated multiplication (keeps results identical
// across libm implementations).
inline double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace detail

// A(a)^s v computed as s successive convolutions; the first s entries of the
// result are exactly zero.  Requires 1 <= s <= n-1 and v of length n.
CVec apply_shift_power(const CoefficientVector& a, const CVec& v, int s);

// Koebe function k(z) = z (1-z)^{-2}: coefficients (1, 2, ..., n).
CoefficientVector koebe_coefficients(int n);

// Simultaneous rotation of a functional/coefficient pair:
// nu_k = exp(i(k-1)beta) lambda_k, a'_k = exp(i(k-1)beta) a_k.
// Preserves the functional value sum conj(nu_k) a'_k exactly.
std::pair<FunctionalSpec, CoefficientVector> rotate_pair(const FunctionalSpec& lambda,
                                                         const CoefficientVector& a,
                                                         RotationAngle beta);

// Coefficientwise (1-alpha) lambda + alpha mu; alpha restricted to [0, 1].
FunctionalSpec blend_functionals(const FunctionalSpec& lambda, const FunctionalSpec& mu,
                                 double alpha);

// L(f) = sum_{k=2}^n conj(lambda_k) a_k.
Complex functional_value(const FunctionalSpec& lambda, const CoefficientVector& a);

}  // namespace loewner
