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
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "sqz/observables.hpp"

using namespace sqz;

namespace {

std::mt19937_64 rng(123456);

Eigen::VectorXcd random_ket(int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cplx(g(rng), g(rng));
  v.normalize();
  return v;
}

DenseMat random_density(int dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMat g(dim, dim);
  for (int i = 0; i < g.size(); ++i) g.data()[i] = cplx(u(rng), u(rng));
  DenseMat rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

}  // namespace

TEST_CASE("partial trace recovers the factors of a product state") {
  HilbertSpec spec;
  spec.cavity_dim = 3;
  spec.mech_dim = 4;

  const DenseMat ra = random_density(3);
  const DenseMat rc = random_density(3);
  const DenseMat rm = random_density(4);
  const SparseMat full = kron(kron(SparseMat(ra.sparseView()), SparseMat(rc.sparseView())),
                              SparseMat(rm.sparseView()));
  const DenseMat rho = DenseMat(full);

  CHECK((partial_trace(rho, Subsystem::Atom, spec) - ra).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((partial_trace(rho, Subsystem::Cavity, spec) - rc).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((partial_trace(rho, Subsystem::Mech, spec) - rm).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(partial_trace(rho, Subsystem::Mech, spec).trace() - cplx(1.0, 0.0)) < 1e-12);

  CHECK_THROWS_AS(partial_trace(random_density(10), Subsystem::Mech, spec),
                  std::invalid_argument);
}

TEST_CASE("coherent states have the right mean field and Poisson occupation") {
  const int dim = 25;
  const cplx alpha(0.7, -0.3);
  const DenseMat rho = coherent_state(dim, alpha);
  CHECK(std::abs(rho.trace() - cplx(1.0, 0.0)) < 1e-12);

  const DenseMat a = annihilation_dense(dim);
  CHECK(std::abs(expectation(a, rho) - alpha) < 1e-10);
  CHECK(std::abs(expectation(SparseMat(a.sparseView()), rho) - alpha) < 1e-10);
  CHECK(std::abs(expectation(DenseMat(a.adjoint() * a), rho) - cplx(std::norm(alpha), 0.0)) <
        1e-10);
}

TEST_CASE("quadrature variances hit the vacuum, coherent and squeezed benchmarks") {
  CHECK(quadrature_variance(basis_state(10, 0), Quadrature::X) == doctest::Approx(0.25));
  CHECK(quadrature_variance(basis_state(10, 0), Quadrature::Y) == doctest::Approx(0.25));

  // Coherent states keep vacuum noise; the mean must be subtracted.
  const DenseMat coh = coherent_state(30, cplx(1.1, 0.6));
  CHECK(quadrature_variance(coh, Quadrature::X) == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(quadrature_variance(coh, Quadrature::Y) == doctest::Approx(0.25).epsilon(1e-8));

  // Fock state n: (2n+1)/4 in both quadratures.
  CHECK(quadrature_variance(basis_state(10, 2), Quadrature::X) == doctest::Approx(1.25));

  const double r = 0.3;
  const DenseMat sq = squeezed_vacuum(24, r, 0.0);
  const double vx = quadrature_variance(sq, Quadrature::X);
  const double vy = quadrature_variance(sq, Quadrature::Y);
  CHECK(vx == doctest::Approx(std::exp(-2.0 * r) / 4.0).epsilon(1e-10));
  CHECK(vy == doctest::Approx(std::exp(2.0 * r) / 4.0).epsilon(1e-10));
  CHECK(vx * vy >= 1.0 / 16.0 - 1e-10);  // minimum-uncertainty state
}

TEST_CASE("fidelity reduces to the ket overlap on pure states") {
  const int dim = 10;
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::VectorXcd psi = random_ket(dim);
    const Eigen::VectorXcd phi = random_ket(dim);
    const DenseMat r1 = psi * psi.adjoint();
    const DenseMat r2 = phi * phi.adjoint();
    const double want = std::abs(psi.dot(phi));
    CHECK(fidelity(r1, r2) == doctest::Approx(want).epsilon(1e-8));
  }

  const DenseMat rho = random_density(dim);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));

  const DenseMat s1 = random_density(dim);
  const DenseMat s2 = random_density(dim);
  CHECK(fidelity(s1, s2) == doctest::Approx(fidelity(s2, s1)).epsilon(1e-10));

  CHECK(fidelity(basis_state(4, 0), basis_state(4, 3)) == doctest::Approx(0.0).epsilon(1e-8));

  DenseMat skew = random_density(4);
  skew(0, 1) += cplx(0.0, 0.5);
  CHECK_THROWS_AS(fidelity(skew, basis_state(4, 0)), std::invalid_argument);
  CHECK_THROWS_AS(fidelity(basis_state(4, 0), basis_state(5, 0)), std::invalid_argument);
}

TEST_CASE("trace distance separates orthogonal states and vanishes on equals") {
  const DenseMat rho = random_density(6);
  CHECK(trace_distance(rho, rho) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(trace_distance(basis_state(6, 0), basis_state(6, 1)) == doctest::Approx(1.0));
  CHECK(trace_distance(basis_state(6, 0), coherent_state(6, cplx(0.0, 0.0))) <
        1e-12);
}

TEST_CASE("purity distinguishes pure from maximally mixed") {
  CHECK(purity(basis_state(8, 3)) == doctest::Approx(1.0));
  const DenseMat mixed = DenseMat::Identity(8, 8) / 8.0;
  CHECK(purity(mixed) == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("displacement operator matches the matrix exponential away from the cutoff") {
  const int dim = 18;
  const cplx beta(0.4, -0.25);
  const DenseMat a = annihilation_dense(dim);
  const DenseMat gen = beta * a.adjoint() - std::conj(beta) * a;
  const DenseMat viaExp = gen.exp();
  const DenseMat D = displacement_operator(dim, beta);

  CHECK((D.topLeftCorner(10, 10) - viaExp.topLeftCorner(10, 10)).cwiseAbs().maxCoeff() <
        1e-10);

  // Near-unitarity in the low-occupation block.
  const DenseMat gram = D.adjoint() * D;
  CHECK((gram.topLeftCorner(8, 8) - DenseMat::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-8);

  // D(beta)|0> is the coherent state |beta>.
  const Eigen::VectorXcd col = D.col(0);
  const DenseMat proj = col * col.adjoint();
  CHECK((proj - coherent_state(dim, beta)).cwiseAbs().maxCoeff() < 1e-10);

  CHECK_THROWS_AS(displacement_operator(1, beta), std::invalid_argument);
}

TEST_CASE("wigner function of vacuum is the normalized Gaussian") {
  const DenseMat vac = basis_state(12, 0);

  std::vector<cplx> grid;
  const int n = 61;
  const double lim = 3.0, h = 2.0 * lim / (n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grid.emplace_back(-lim + i * h, -lim + j * h);
  const std::vector<double> w = wigner(vac, grid);

  double integral = 0.0;
  for (double v : w) integral += v * h * h;
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));

  const std::vector<double> peak = wigner(vac, {cplx(0.0, 0.0)});
  CHECK(peak[0] == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-6));
}

TEST_CASE("wigner contours of a squeezed state are anisotropic the right way round") {
  const DenseMat sq = squeezed_vacuum(16, 0.5, 0.0);  // squeezes X
  const std::vector<double> w = wigner(sq, {cplx(0.5, 0.0), cplx(0.0, 0.5)});
  CHECK(w[0] < w[1]);
}

TEST_CASE("squeezed vacuum ket has even support and the hyperbolic occupation") {
  const int dim = 40;  // tail mass beyond the cutoff sits below 1e-12 here
  const double r = 0.5;
  const Eigen::VectorXcd ket = squeezed_vacuum_ket(dim, r, 0.0);
  CHECK(ket.norm() == doctest::Approx(1.0).epsilon(1e-14));
  for (int k = 1; k < dim; k += 2) CHECK(std::abs(ket(k)) == 0.0);

  const DenseMat rho = squeezed_vacuum(dim, r, 0.0);
  const DenseMat a = annihilation_dense(dim);
  const double n = expectation(DenseMat(a.adjoint() * a), rho).real();
  CHECK(n == doctest::Approx(std::sinh(r) * std::sinh(r)).epsilon(1e-10));

  // <b^2> = -exp(i theta) sinh(r) cosh(r); real negative for theta = 0.
  const cplx b2 = expectation(DenseMat(a * a), rho);
  CHECK(b2.real() == doctest::Approx(-std::sinh(r) * std::cosh(r)).epsilon(1e-10));
  CHECK(std::abs(b2.imag()) < 1e-12);

  CHECK_THROWS_AS(squeezed_vacuum_ket(8, -0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(basis_state(4, 7), std::invalid_argument);
}
