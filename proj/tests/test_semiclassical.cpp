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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "sqz/errors.hpp"
#include "sqz/semiclassical.hpp"

using namespace sqz;

namespace {

Eigen::Matrix<double, 10, 1> pack(const MomentState& s) {
  Eigen::Matrix<double, 10, 1> x;
  x << s.n_a, s.n_b, s.a2.real(), s.a2.imag(), s.b2.real(), s.b2.imag(),
      s.adb.real(), s.adb.imag(), s.ab.real(), s.ab.imag();
  return x;
}

MomentState random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MomentState s;
  s.n_a = u(rng);
  s.n_b = u(rng);
  s.a2 = cplx(u(rng), u(rng));
  s.b2 = cplx(u(rng), u(rng));
  s.adb = cplx(u(rng), u(rng));
  s.ab = cplx(u(rng), u(rng));
  return s;
}

SemiclassicalParams default_sc(double q) {
  SystemParams p;
  p.q = q;
  return SemiclassicalParams::from(p);
}

}  // namespace

TEST_CASE("frozen atomic coherence takes its drive-determined value") {
  // 2*25*25 / (400 + 4*(625+625)) = 1250/5400
  CHECK(sigma_ss(25.0, 25.0, 20.0) == doctest::Approx(1250.0 / 5400.0).epsilon(1e-15));
  CHECK(sigma_ss(0.0, 25.0, 20.0) == 0.0);
  CHECK_THROWS_AS(sigma_ss(0.0, 0.0, 0.0), std::invalid_argument);

  const SemiclassicalParams sc = default_sc(0.01);
  CHECK(sc.sigma == doctest::Approx(1250.0 / 5400.0).epsilon(1e-15));
  CHECK(sc.J == doctest::Approx(1.0));
  CHECK(sc.q == doctest::Approx(0.01));

  SemiclassicalParams bad = sc;
  bad.kappa_b = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("matrix plus constant reproduces the nonlinear-free rhs on random states") {
  std::mt19937_64 rng(7);
  const SemiclassicalParams p = default_sc(0.015);
  const auto M = moment_matrix(p);
  const auto c = moment_constant(p);

  for (int trial = 0; trial < 20; ++trial) {
    const MomentState s = random_state(rng);
    const Eigen::Matrix<double, 10, 1> via_matrix = M * pack(s) + c;
    const Eigen::Matrix<double, 10, 1> via_rhs = pack(moment_rhs(s, p));
    CHECK((via_matrix - via_rhs).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("moment steady state agrees with the closed-form variances") {
  for (double q : {0.002, 0.005, 0.01, 0.02, 0.04}) {
    const SemiclassicalParams p = default_sc(q);
    const MomentState ss = moment_steady_state(p);
    const CoherentVariances cv = analytic_variance_coherent(p);

    CHECK(var_y_from_moments(ss.n_a, ss.a2) == doctest::Approx(cv.var_ya).epsilon(1e-12));
    CHECK(var_y_from_moments(ss.n_b, ss.b2) == doctest::Approx(cv.var_yb).epsilon(1e-12));

    // The rhs should vanish at the fixed point.
    const Eigen::Matrix<double, 10, 1> residual = pack(moment_rhs(ss, p));
    CHECK(residual.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("reference operating point evaluates to the frozen variance digits") {
  const SemiclassicalParams p = default_sc(0.01);
  const CoherentVariances cv = analytic_variance_coherent(p);
  CHECK(cv.var_ya == doctest::Approx(0.210236075506).epsilon(1e-9));
  CHECK(cv.var_yb == doctest::Approx(0.201256783306).epsilon(1e-9));

  // Ladder parameters behind those numbers.
  CHECK(cv.m == doctest::Approx(4.0 * 0.01 / 0.202).epsilon(1e-12));
  const double sigma = 1250.0 / 5400.0;
  CHECK(cv.n ==
        doctest::Approx((0.2 * 0.002 + 4.0 * sigma * sigma) / (4.0 * 0.01 * 0.2)).epsilon(1e-12));
  CHECK(cv.s == doctest::Approx(0.002 / 0.202).epsilon(1e-12));
}

TEST_CASE("coherent variances collapse to vacuum when the pump is off") {
  const CoherentVariances cv = analytic_variance_coherent(default_sc(0.0));
  CHECK(cv.var_ya == 0.25);
  CHECK(cv.var_yb == 0.25);
}

TEST_CASE("squeezed-reservoir moments match the closed form and frozen digits") {
  SystemParams sys;
  sys.q = 0.0;
  sys.kappa_b = 0.2;  // symmetric loss in the reservoir setup
  SemiclassicalParams p = SemiclassicalParams::from(sys);
  SqueezedBathParams bath;
  bath.r = 0.3;
  bath.theta = M_PI;

  const MomentState ss = moment_steady_state_bath(p, bath);
  const BathVariances bv = analytic_variance_bath(p, bath);
  CHECK(var_x_from_moments(ss.n_a, ss.a2) == doctest::Approx(bv.var_xa).epsilon(1e-12));
  CHECK(var_x_from_moments(ss.n_b, ss.b2) == doctest::Approx(bv.var_xb).epsilon(1e-12));

  CHECK(bv.var_xa == doctest::Approx(0.202471).epsilon(1e-5));
  CHECK(bv.var_xb == doctest::Approx(0.184731).epsilon(1e-5));
}

TEST_CASE("reservoir quadrature obeys 1 + 2N - 2|M| = exp(-2r) at theta = pi") {
  for (double r : {0.0, 0.2, 0.5, 1.0, 1.8}) {
    SqueezedBathParams bath;
    bath.r = r;
    bath.theta = M_PI;
    const double lhs = 1.0 + 2.0 * bath.N() - 2.0 * bath.M().real();
    CHECK(lhs == doctest::Approx(std::exp(-2.0 * r)).epsilon(1e-12));
  }
}

TEST_CASE("stability flags flip across the pump threshold") {
  const StabilityResult below = stability(default_sc(0.0));
  CHECK(below.is_stable);
  CHECK(below.max_real < 0.0);
  CHECK(below.eigenvalues.size() == 10);

  const StabilityResult above = stability(default_sc(0.06));
  CHECK(!above.is_stable);
  CHECK(above.max_real > 0.0);

  // The closed-form flag tracks 4q < kappa_a + kappa_b regardless of J.
  CHECK(below.closed_criterion_stable);
  CHECK(!above.closed_criterion_stable);
  CHECK(stability(default_sc(0.0504)).closed_criterion_stable);
  CHECK(!stability(default_sc(0.0506)).closed_criterion_stable);
}

TEST_CASE("bisection pins the spectral threshold for decoupled and coupled modes") {
  // With J = 0 the mechanical block [[-kb, 4q], [4q, -kb]] destabilizes at
  // q = kappa_b / 4.
  SemiclassicalParams decoupled = default_sc(0.0);
  decoupled.J = 0.0;
  const double q_dec = bisect_stability_threshold(decoupled, 0.0, 0.01);
  CHECK(q_dec == doctest::Approx(0.002 / 4.0).epsilon(1e-8));

  // With J = 1 the binding block is the (ab, a^dag b) pair, which crosses at
  // q = (kappa_a + kappa_b) / 4.
  const double q_cpl = bisect_stability_threshold(default_sc(0.0), 0.0, 0.2);
  CHECK(q_cpl == doctest::Approx(0.202 / 4.0).epsilon(1e-8));

  CHECK_THROWS_AS(bisect_stability_threshold(default_sc(0.0), 0.1, 0.2),
                  std::invalid_argument);
}

TEST_CASE("variance helpers recombine to the occupation identity") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double n = u(rng);
    const cplx o2(u(rng) - 1.0, u(rng) - 1.0);
    const double vx = var_x_from_moments(n, o2);
    const double vy = var_y_from_moments(n, o2);
    CHECK(vx + vy == doctest::Approx((1.0 + 2.0 * n) / 2.0).epsilon(1e-13));
    CHECK(vx - vy == doctest::Approx(o2.real()).epsilon(1e-13));
  }
}

TEST_CASE("steady-state solve reports singularity at the threshold") {
  // Decoupled modes, kappa_b = 4q exactly in binary: the (n_b, Re b2) block
  // [[-kb, 4q], [4q, -kb]] has a hard zero pivot.
  SemiclassicalParams p;
  p.J = 0.0;
  p.q = 0.1;
  p.kappa_b = 0.4;
  p.sigma = 0.2;
  CHECK_THROWS_AS(moment_steady_state(p), SingularSystemError);
}
