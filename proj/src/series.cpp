#include "loewner/series.hpp"

#include <cmath>
#include <numbers>

namespace loewner {

CoefficientVector CoefficientVector::from(CVec coeffs) {
  if (coeffs.size() < 2) throw DomainError("coefficient vector requires n >= 2");
  if (coeffs[0] != Complex(1.0, 0.0)) throw DomainError("coefficient vector requires a_1 == 1");
  CoefficientVector out;
  out.n = static_cast<int>(coeffs.size());
  out.a = std::move(coeffs);
  return out;
}

FunctionalSpec FunctionalSpec::from(int n, CVec lam) {
  if (n < 2) throw DomainError("functional requires n >= 2");
  if (lam.size() != static_cast<size_t>(n - 1))
    throw DomainError("functional requires n-1 coefficients (lambda_2..lambda_n)");
  if (lam.back() == Complex(0.0, 0.0)) throw DomainError("functional requires lambda_n != 0");
  FunctionalSpec out;
  out.n = n;
  out.lambda = std::move(lam);
  return out;
}

RotationAngle RotationAngle::of(double raw) {
  if (!std::isfinite(raw)) throw DomainError("rotation angle must be finite");
  const double two_pi = 2.0 * std::numbers::pi;
  double b = std::fmod(raw, two_pi);
  if (b < 0.0) b += two_pi;
  return RotationAngle{b};
}

CVec apply_shift_power(const CoefficientVector& a, const CVec& v, int s) {
  if (s < 1 || s > a.n - 1) throw DomainError("shift power s must lie in [1, n-1]");
  if (v.size() != a.a.size()) throw DomainError("vector length must equal n");
  CVec w = v;
  for (int p = 0; p < s; ++p) detail::shift_down_inplace(a.a, w);
  return w;
}

CoefficientVector koebe_coefficients(int n) {
  if (n < 2) throw DomainError("koebe_coefficients requires n >= 2");
  CVec c(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) c[static_cast<size_t>(k - 1)] = Complex(static_cast<double>(k), 0.0);
  return CoefficientVector::from(std::move(c));
}

std::pair<FunctionalSpec, CoefficientVector> rotate_pair(const FunctionalSpec& lambda,
                                                         const CoefficientVector& a,
                                                         RotationAngle beta) {
  if (lambda.n != a.n) throw DomainError("rotate_pair requires matching n");
  FunctionalSpec nu;
  nu.n = lambda.n;
  nu.lambda.resize(lambda.lambda.size());
  CoefficientVector ar;
  ar.n = a.n;
  ar.a.resize(a.a.size());
  for (int k = 1; k <= a.n; ++k) {
    const Complex phase = std::polar(1.0, static_cast<double>(k - 1) * beta.beta);
    ar.a[static_cast<size_t>(k - 1)] = phase * a.a[static_cast<size_t>(k - 1)];
    if (k >= 2) nu.lambda[static_cast<size_t>(k - 2)] = phase * lambda.at(k);
  }
  ar.a[0] = Complex(1.0, 0.0);  // phase at k=1 is exp(0); keep the normalization bit-exact
  return {std::move(nu), std::move(ar)};
}

FunctionalSpec blend_functionals(const FunctionalSpec& lambda, const FunctionalSpec& mu,
                                 double alpha) {
  if (lambda.n != mu.n) throw DomainError("blend_functionals requires matching n");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("blend parameter must lie in [0, 1]");
  FunctionalSpec out;
  out.n = lambda.n;
  out.lambda.resize(lambda.lambda.size());
  for (size_t i = 0; i < out.lambda.size(); ++i)
    out.lambda[i] = (1.0 - alpha) * lambda.lambda[i] + alpha * mu.lambda[i];
  return out;
}

Complex functional_value(const FunctionalSpec& lambda, const CoefficientVector& a) {
  if (lambda.n != a.n) throw DomainError("functional_value requires matching n");
  Complex acc{};
  for (int k = 2; k <= a.n; ++k) acc += std::conj(lambda.at(k)) * a.at(k);
  return acc;
}

}  // namespace loewner
