// Copyright 2026 The squeezetransfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqz/semiclassical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sqz/errors.hpp"

namespace sqz {

SemiclassicalParams SemiclassicalParams::from(const SystemParams& p) {
  SemiclassicalParams out;
  out.J = p.J();
  out.q = p.q;
  out.kappa_a = p.kappa_a;
  out.kappa_b = p.kappa_b;
  out.sigma = sigma_ss(p.E1, p.E2, p.gamma10);
  return out;
}

void SemiclassicalParams::validate() const {
  if (q < 0.0 || kappa_a < 0.0 || kappa_b < 0.0) {
    throw std::invalid_argument("SemiclassicalParams: rates and q must be >= 0");
  }
}

double sigma_ss(double E1, double E2, double gamma10) {
  const double denom = gamma10 * gamma10 + 4.0 * (E1 * E1 + E2 * E2);
  if (denom == 0.0) {
    throw std::invalid_argument("sigma_ss: E1, E2 and gamma10 cannot all vanish");
  }
  return 2.0 * E1 * E2 / denom;
}

MomentState moment_rhs(const MomentState& s, const SemiclassicalParams& p) {
  const double Js = p.J * p.sigma;
  const double kab = (p.kappa_a + p.kappa_b) / 2.0;
  MomentState d;
  d.n_a = -2.0 * Js * s.adb.real() - p.kappa_a * s.n_a;
  d.n_b = 2.0 * Js * s.adb.real() + 4.0 * p.q * s.b2.real() - p.kappa_b * s.n_b;
  d.a2 = -2.0 * Js * s.ab - p.kappa_a * s.a2;
  d.b2 = 2.0 * Js * s.ab + 4.0 * p.q * s.n_b - p.kappa_b * s.b2 + 2.0 * p.q;
  d.adb = -Js * (s.n_b - s.n_a) + 2.0 * p.q * s.ab - kab * s.adb;
  d.ab = -Js * (s.b2 - s.a2) + 2.0 * p.q * s.adb - kab * s.ab;
  return d;
}

// Component order: n_a, n_b, Re a2, Im a2, Re b2, Im b2, Re adb, Im adb, Re ab, Im ab.
Eigen::Matrix<double, 10, 10> moment_matrix(const SemiclassicalParams& p) {
  p.validate();
  const double Js = p.J * p.sigma;
  const double ka = p.kappa_a, kb = p.kappa_b, q = p.q;
  const double kab = (ka + kb) / 2.0;
  Eigen::Matrix<double, 10, 10> M = Eigen::Matrix<double, 10, 10>::Zero();
  enum { NA, NB, RA2, IA2, RB2, IB2, RADB, IADB, RAB, IAB };

  M(NA, RADB) = -2.0 * Js;           M(NA, NA) = -ka;
  M(NB, RADB) = 2.0 * Js;            M(NB, RB2) = 4.0 * q;   M(NB, NB) = -kb;

  M(RA2, RAB) = -2.0 * Js;           M(RA2, RA2) = -ka;
  M(IA2, IAB) = -2.0 * Js;           M(IA2, IA2) = -ka;

  M(RB2, RAB) = 2.0 * Js;  M(RB2, NB) = 4.0 * q;  M(RB2, RB2) = -kb;
  M(IB2, IAB) = 2.0 * Js;                         M(IB2, IB2) = -kb;

  M(RADB, NB) = -Js;  M(RADB, NA) = Js;  M(RADB, RAB) = 2.0 * q;  M(RADB, RADB) = -kab;
  M(IADB, IAB) = 2.0 * q;                                         M(IADB, IADB) = -kab;

  M(RAB, RB2) = -Js;  M(RAB, RA2) = Js;  M(RAB, RADB) = 2.0 * q;  M(RAB, RAB) = -kab;
  M(IAB, IB2) = -Js;  M(IAB, IA2) = Js;  M(IAB, IADB) = 2.0 * q;  M(IAB, IAB) = -kab;
  return M;
}

Eigen::Matrix<double, 10, 1> moment_constant(const SemiclassicalParams& p) {
  Eigen::Matrix<double, 10, 1> c = Eigen::Matrix<double, 10, 1>::Zero();
  c(4) = 2.0 * p.q;  // Re b2 picks up the pump constant
  return c;
}

Eigen::Matrix<double, 10, 1> moment_constant_bath(const SemiclassicalParams& p,
                                                  const SqueezedBathParams& bath) {
  Eigen::Matrix<double, 10, 1> c = moment_constant(p);
  const cplx M = bath.M();
  c(1) += p.kappa_b * bath.N();
  c(4) += -p.kappa_b * M.real();
  c(5) += -p.kappa_b * M.imag();
  return c;
}

namespace {

MomentState solve_linear(const Eigen::Matrix<double, 10, 10>& M,
                         const Eigen::Matrix<double, 10, 1>& c) {
  Eigen::FullPivLU<Eigen::Matrix<double, 10, 10>> lu(M);
  if (!lu.isInvertible()) {
    throw SingularSystemError("moment_steady_state: moment matrix is singular");
  }
  const Eigen::Matrix<double, 10, 1> x = lu.solve(-c);
  MomentState s;
  s.n_a = x(0);
  s.n_b = x(1);
  s.a2 = {x(2), x(3)};
  s.b2 = {x(4), x(5)};
  s.adb = {x(6), x(7)};
  s.ab = {x(8), x(9)};
  return s;
}

}  // namespace

MomentState moment_steady_state(const SemiclassicalParams& p) {
  return solve_linear(moment_matrix(p), moment_constant(p));
}

MomentState moment_steady_state_bath(const SemiclassicalParams& p,
                                     const SqueezedBathParams& bath) {
  return solve_linear(moment_matrix(p), moment_constant_bath(p, bath));
}

StabilityResult stability(const SemiclassicalParams& p) {
  StabilityResult res;
  Eigen::EigenSolver<Eigen::Matrix<double, 10, 10>> es(moment_matrix(p), false);
  res.max_real = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10; ++i) {
    const cplx ev = es.eigenvalues()(i);
    res.eigenvalues.push_back(ev);
    res.max_real = std::max(res.max_real, ev.real());
  }
  res.is_stable = res.max_real < 0.0;
  res.closed_criterion_stable = 4.0 * p.q < p.kappa_a + p.kappa_b;
  return res;
}

double bisect_stability_threshold(SemiclassicalParams p, double q_lo, double q_hi,
                                  double tol) {
  auto stable_at = [&p](double q) {
    p.q = q;
    return stability(p).is_stable;
  };
  if (!stable_at(q_lo) || stable_at(q_hi)) {
    throw std::invalid_argument(
        "bisect_stability_threshold: need q_lo stable and q_hi unstable");
  }
  while (q_hi - q_lo > tol) {
    const double mid = 0.5 * (q_lo + q_hi);
    (stable_at(mid) ? q_lo : q_hi) = mid;
  }
  return 0.5 * (q_lo + q_hi);
}

CoherentVariances analytic_variance_coherent(const SemiclassicalParams& p) {
  p.validate();
  CoherentVariances v;
  if (p.q == 0.0) return v;  // vacuum limit of the closed forms
  v.m = 4.0 * p.q / (p.kappa_a + p.kappa_b);
  v.n = (p.kappa_a * p.kappa_b + 4.0 * p.J * p.J * p.sigma * p.sigma) /
        (4.0 * p.q * p.kappa_a);
  v.s = p.kappa_b / (p.kappa_a + p.kappa_b);
  const double denom = 4.0 * (v.m + 1.0) * (v.n + 1.0);
  v.var_ya = (v.m + v.n + v.s + 1.0) / denom;
  v.var_yb = (v.n + v.s) / denom;
  return v;
}

BathVariances analytic_variance_bath(const SemiclassicalParams& p,
                                     const SqueezedBathParams& bath) {
  p.validate();
  bath.validate();
  const double Js2 = p.J * p.J * p.sigma * p.sigma;
  // N - M is real whenever theta = pi (the squeezing axis used throughout).
  const double NmM = bath.N() - bath.M().real();
  BathVariances v;
  v.p = p.kappa_a * p.kappa_b / (4.0 * Js2 + p.kappa_a * p.kappa_b);
  v.l = Js2 * (p.kappa_b * (1.0 + 2.0 * NmM) + p.kappa_a) /
        ((p.kappa_a + p.kappa_b) * (4.0 * Js2 + p.kappa_a * p.kappa_b));
  v.var_xa = v.p / 4.0 + v.l;
  v.var_xb = (v.p / 4.0) * (2.0 * NmM + 1.0) + v.l;
  return v;
}

double var_y_from_moments(double n, cplx o2) {
  return (2.0 * n - 2.0 * o2.real() + 1.0) / 4.0;
}

double var_x_from_moments(double n, cplx o2) {
  return (2.0 * n + 2.0 * o2.real() + 1.0) / 4.0;
}

}  // namespace sqz
