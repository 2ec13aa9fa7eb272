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

#ifndef SQZ_SEMICLASSICAL_HPP
#define SQZ_SEMICLASSICAL_HPP

#include <vector>

#include <Eigen/Dense>

#include "sqz/model.hpp"

namespace sqz {

// Second moments of the two modes under the adiabatic factorization
// <a^dag b sigma> -> <a^dag b><sigma>, with the atomic coherence frozen at
// its drive-determined value sigma. First moments stay zero (no linear
// drive on either mode), so quadrature variances follow directly from
// these six numbers.
struct MomentState {
  double n_a = 0.0;  // <a^dag a>
  double n_b = 0.0;  // <b^dag b>
  cplx a2{0.0, 0.0};   // <a^2>
  cplx b2{0.0, 0.0};   // <b^2>
  cplx adb{0.0, 0.0};  // <a^dag b>
  cplx ab{0.0, 0.0};   // <a b>
};

struct SemiclassicalParams {
  double J = 1.0;
  double q = 0.0;
  double kappa_a = 0.2;
  double kappa_b = 0.002;
  double sigma = 0.0;  // frozen <sigma_21>

  static SemiclassicalParams from(const SystemParams& p);
  void validate() const;
};

// Steady atomic coherence under the two strong drives,
// sigma = 2 E1 E2 / (gamma10^2 + 4 (E1^2 + E2^2)).
double sigma_ss(double E1, double E2, double gamma10);

// Right-hand side of the closed moment system (the +2q constant lives in
// the <b^2> equation).
MomentState moment_rhs(const MomentState& s, const SemiclassicalParams& p);

// The moment system is linear, dx/dt = M x + c, over the 10 real components
// (n_a, n_b, Re a2, Im a2, Re b2, Im b2, Re adb, Im adb, Re ab, Im ab).
Eigen::Matrix<double, 10, 10> moment_matrix(const SemiclassicalParams& p);
Eigen::Matrix<double, 10, 1> moment_constant(const SemiclassicalParams& p);

// Extra inhomogeneity when the mechanical mode couples to the squeezed
// reservoir instead of the vacuum: +kappa_b N into n_b, -kappa_b M into b2.
Eigen::Matrix<double, 10, 1> moment_constant_bath(const SemiclassicalParams& p,
                                                  const SqueezedBathParams& bath);

// Linear-solve steady state M x + c = 0; throws SingularSystemError when the
// matrix is singular (at the stability boundary).
MomentState moment_steady_state(const SemiclassicalParams& p);
MomentState moment_steady_state_bath(const SemiclassicalParams& p,
                                     const SqueezedBathParams& bath);

struct StabilityResult {
  bool is_stable = false;                // all eigenvalue real parts < 0
  std::vector<cplx> eigenvalues;         // spectrum of the 10x10 real matrix
  double max_real = 0.0;
  bool closed_criterion_stable = false;  // 4q < kappa_a + kappa_b
};

StabilityResult stability(const SemiclassicalParams& p);

// Bisect q between q_lo (stable) and q_hi (unstable) to the requested width.
double bisect_stability_threshold(SemiclassicalParams p, double q_lo, double q_hi,
                                  double tol = 1e-12);

struct CoherentVariances {
  double var_ya = 0.25;
  double var_yb = 0.25;
  double m = 0.0, n = 0.0, s = 0.0;
};

// Closed-form steady-state Y variances for the coherent-pump case; q = 0
// returns the vacuum value 1/4 by continuity.
CoherentVariances analytic_variance_coherent(const SemiclassicalParams& p);

struct BathVariances {
  double var_xa = 0.25;
  double var_xb = 0.25;
  double p = 0.0, l = 0.0;
};

// Closed-form steady-state X variances for the squeezed-reservoir case.
BathVariances analytic_variance_bath(const SemiclassicalParams& p,
                                     const SqueezedBathParams& bath);

// Variances from second moments at zero mean: Var(Y) = (2n - 2 Re<o^2> + 1)/4,
// Var(X) = (2n + 2 Re<o^2> + 1)/4.
double var_y_from_moments(double n, cplx o2);
double var_x_from_moments(double n, cplx o2);

}  // namespace sqz

#endif  // SQZ_SEMICLASSICAL_HPP
