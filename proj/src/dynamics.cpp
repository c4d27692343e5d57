#include "loewner/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace loewner {

AdjointVector AdjointVector::from(CVec coords) {
  if (coords.size() < 2) throw DomainError("adjoint vector requires n >= 2");
  AdjointVector out;
  out.n = static_cast<int>(coords.size());
  out.psi_bar = std::move(coords);
  return out;
}

namespace {

struct SysState {
  CVec a;
  CVec psi;  // empty when the adjoint system is not integrated
  CVec q;    // empty when the companion system is not integrated
};

struct Scratch {
  CVec wa, wp, wq;
};

// Joint right-hand side of the coefficient/adjoint/companion systems.  All
// three share the running powers of z = exp(-(t+iu)) and of the shift action
// A(a); A^s is applied as s successive convolutions, never as a matrix.
void system_rhs(double t, double u, const SysState& x, SysState& dx, Scratch& s) {
  const int n = static_cast<int>(x.a.size());
  const bool with_psi = !x.psi.empty();
  const bool with_q = !x.q.empty();
  const Complex z = std::exp(Complex(-t, -u));

  s.wa = x.a;
  if (with_psi) s.wp = x.psi;
  if (with_q) s.wq = x.q;
  dx.a.assign(static_cast<size_t>(n), Complex{});
  dx.psi.assign(with_psi ? static_cast<size_t>(n) : 0, Complex{});
  dx.q.assign(with_q ? static_cast<size_t>(n) : 0, Complex{});

  Complex zs{1.0, 0.0};
  for (int sp = 1; sp <= n - 1; ++sp) {
    zs *= z;
    const double w = 2.0 * static_cast<double>(sp + 1);
    detail::shift_down_inplace(x.a, s.wa);
    for (int i = 0; i < n; ++i) dx.a[static_cast<size_t>(i)] += zs * s.wa[static_cast<size_t>(i)];
    if (with_psi) {
      detail::shift_up_inplace(x.a, s.wp);
      for (int i = 0; i < n; ++i)
        dx.psi[static_cast<size_t>(i)] += w * (zs * s.wp[static_cast<size_t>(i)]);
    }
    if (with_q) {
      detail::shift_down_inplace(x.a, s.wq);
      for (int i = 0; i < n; ++i)
        dx.q[static_cast<size_t>(i)] += w * (zs * s.wq[static_cast<size_t>(i)]);
    }
  }
  for (int i = 0; i < n; ++i) dx.a[static_cast<size_t>(i)] *= -2.0;
}

void add_scaled(CVec& y, const CVec& x, double c, const CVec& k) {
  y.resize(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] + c * k[i];
}

void axpy_state(SysState& y, const SysState& x, double c, const SysState& k) {
  add_scaled(y.a, x.a, c, k.a);
  add_scaled(y.psi, x.psi, c, k.psi);
  add_scaled(y.q, x.q, c, k.q);
}

void combine_block(CVec& x, double h6, const CVec& k1, const CVec& k2, const CVec& k3,
                   const CVec& k4) {
  for (size_t i = 0; i < x.size(); ++i)
    x[i] += h6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

bool finite_block(const CVec& v) {
  for (const Complex& c : v)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

bool finite_state(const SysState& x) {
  return finite_block(x.a) && finite_block(x.psi) && finite_block(x.q);
}

struct Stepper {
  Scratch s;
  SysState k1, k2, k3, k4, tmp;

  template <class UofT>
  void step(double t, double h, const UofT& u_at, SysState& x) {
    system_rhs(t, u_at(t), x, k1, s);
    axpy_state(tmp, x, 0.5 * h, k1);
    system_rhs(t + 0.5 * h, u_at(t + 0.5 * h), tmp, k2, s);
    axpy_state(tmp, x, 0.5 * h, k2);
    system_rhs(t + 0.5 * h, u_at(t + 0.5 * h), tmp, k3, s);
    axpy_state(tmp, x, h, k3);
    system_rhs(t + h, u_at(t + h), tmp, k4, s);
    const double h6 = h / 6.0;
    combine_block(x.a, h6, k1.a, k2.a, k3.a, k4.a);
    combine_block(x.psi, h6, k1.psi, k2.psi, k3.psi, k4.psi);
    combine_block(x.q, h6, k1.q, k2.q, k3.q, k4.q);
  }
};

void record_sample(Trajectory* rec, double t, const SysState& x) {
  if (!rec) return;
  rec->times.push_back(t);
  rec->a_samples.push_back(x.a);
  if (!x.psi.empty()) rec->psi_samples.push_back(x.psi);
  if (!x.q.empty()) rec->companion_samples.push_back(x.q);
}

double tail_estimate(const CVec& a, double T) {
  const int n = static_cast<int>(a.size());
  CVec w = a;
  double tail = 0.0;
  for (int sp = 1; sp <= n - 1; ++sp) {
    detail::shift_down_inplace(a, w);
    double mx = 0.0;
    for (const Complex& c : w) mx = std::max(mx, std::abs(c));
    tail += (2.0 / static_cast<double>(sp)) * mx * std::exp(-static_cast<double>(sp) * T);
  }
  return tail;
}

SysState run_integration(const DrivingFunction& u, int n, double T, double h,
                         const std::optional<AdjointVector>& psi0, const std::optional<CVec>& q0,
                         Trajectory* rec) {
  if (n < 2) throw DomainError("integration requires n >= 2");
  if (!(T > 0.0)) throw DomainError("horizon T must be positive");
  if (!(h > 0.0 && h <= T)) throw DomainError("step h must satisfy 0 < h <= T");
  if (psi0 && psi0->n != n) throw DomainError("psi0 dimension must equal n");
  if (q0 && q0->size() != static_cast<size_t>(n)) throw DomainError("q0 dimension must equal n");

  SysState x;
  x.a.assign(static_cast<size_t>(n), Complex{});
  x.a[0] = Complex(1.0, 0.0);
  if (psi0) x.psi = psi0->psi_bar;
  if (q0) x.q = *q0;
  if (!finite_state(x)) throw IntegrationBlowup(0.0, "non-finite initial state");

  std::vector<double> bounds{0.0};
  for (double b : u.jump_times(T))
    if (b > 0.0 && b < T) bounds.push_back(b);
  bounds.push_back(T);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  if (rec) {
    const size_t approx = static_cast<size_t>(T / h) + bounds.size() + 2;
    rec->times.reserve(approx);
    rec->a_samples.reserve(approx);
    if (psi0) rec->psi_samples.reserve(approx);
    if (q0) rec->companion_samples.reserve(approx);
  }
  record_sample(rec, 0.0, x);

  const bool piecewise = std::holds_alternative<PiecewiseConstantDriving>(u.raw());
  Stepper st;
  for (size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
    const double b0 = bounds[seg];
    const double b1 = bounds[seg + 1];
    const double len = b1 - b0;
    // Within a segment u is smooth; for the piecewise variant it is constant,
    // so freeze its value to keep the boundary stages on the correct side of
    // the jump.
    const double useg = piecewise ? u(0.5 * (b0 + b1)) : 0.0;
    const auto u_at = [&](double tau) { return piecewise ? useg : u(tau); };

    long nfull = static_cast<long>(std::floor(len / h + 1e-9));
    double rem = len - static_cast<double>(nfull) * h;
    if (rem < 1e-12 * std::max(1.0, len)) rem = 0.0;

    for (long ks = 0; ks < nfull; ++ks) {
      const double t0 = b0 + static_cast<double>(ks) * h;
      const double t1 = (ks + 1 == nfull && rem == 0.0) ? b1 : b0 + static_cast<double>(ks + 1) * h;
      st.step(t0, t1 - t0, u_at, x);
      if (!finite_state(x)) throw IntegrationBlowup(t1, "non-finite state during integration");
      record_sample(rec, t1, x);
    }
    if (rem > 0.0) {
      const double t0 = b0 + static_cast<double>(nfull) * h;
      st.step(t0, b1 - t0, u_at, x);
      if (!finite_state(x)) throw IntegrationBlowup(b1, "non-finite state during integration");
      record_sample(rec, b1, x);
    }
  }
  return x;
}

void append_number(std::string& line, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

}  // namespace

CVec coefficient_rhs(double t, const CoefficientVector& a, double u_val) {
  SysState x{a.a, {}, {}};
  SysState dx;
  Scratch s;
  system_rhs(t, u_val, x, dx, s);
  return dx.a;
}

CVec adjoint_rhs(double t, const CoefficientVector& a, const AdjointVector& psi, double u_val) {
  if (a.n != psi.n) throw DomainError("adjoint_rhs requires matching n");
  SysState x{a.a, psi.psi_bar, {}};
  SysState dx;
  Scratch s;
  system_rhs(t, u_val, x, dx, s);
  return dx.psi;
}

CVec companion_rhs(double t, const CoefficientVector& a, const CVec& q, double u_val) {
  if (q.size() != a.a.size()) throw DomainError("companion_rhs requires matching n");
  SysState x{a.a, {}, q};
  SysState dx;
  Scratch s;
  system_rhs(t, u_val, x, dx, s);
  return dx.q;
}

Trajectory integrate(const DrivingFunction& u, int n, double T, double h,
                     const std::optional<AdjointVector>& psi0, const std::optional<CVec>& q0) {
  Trajectory traj;
  traj.n = n;
  traj.horizon = T;
  traj.step = h;
  const SysState final = run_integration(u, n, T, h, psi0, q0, &traj);
  traj.tail_error_estimate = tail_estimate(final.a, T);
  return traj;
}

CVec integrate_final_coefficients(const DrivingFunction& u, int n, double T, double h) {
  return run_integration(u, n, T, h, std::nullopt, std::nullopt, nullptr).a;
}

LimitCoefficients extract_limit_coefficients(const Trajectory& traj, double tol) {
  if (traj.a_samples.empty()) throw DomainError("trajectory has no samples");
  if (!(tol > 0.0)) throw DomainError("tail tolerance must be positive");
  LimitCoefficients out{CoefficientVector::from(traj.a_samples.back()), traj.tail_error_estimate,
                        traj.tail_error_estimate <= tol};
  return out;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
  std::string line = "t";
  for (int k = 2; k <= traj.n; ++k)
    line += ",re_a" + std::to_string(k) + ",im_a" + std::to_string(k);
  if (traj.has_psi())
    for (int k = 2; k <= traj.n; ++k)
      line += ",re_psi" + std::to_string(k) + ",im_psi" + std::to_string(k);
  os << line << '\n';

  for (size_t i = 0; i < traj.times.size(); ++i) {
    line.clear();
    append_number(line, traj.times[i]);
    for (int k = 2; k <= traj.n; ++k) {
      const Complex& c = traj.a_samples[i][static_cast<size_t>(k - 1)];
      line += ',';
      append_number(line, c.real());
      line += ',';
      append_number(line, c.imag());
    }
    if (traj.has_psi()) {
      for (int k = 2; k <= traj.n; ++k) {
        const Complex& c = traj.psi_samples[i][static_cast<size_t>(k - 1)];
        line += ',';
        append_number(line, c.real());
        line += ',';
        append_number(line, c.imag());
      }
    }
    os << line << '\n';
  }
}

}  // namespace loewner
