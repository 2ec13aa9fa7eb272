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

#ifndef SQZ_OBSERVABLES_HPP
#define SQZ_OBSERVABLES_HPP

#include <vector>

#include "sqz/operator_algebra.hpp"

namespace sqz {

// Mode quadratures X = (o + o^dag)/2 and Y = (o - o^dag)/(2i); both have
// variance 1/4 in vacuum. The coherent pump i q (b^dag^2 - b^2) squeezes Y,
// the theta = pi reservoir squeezes X.
enum class Quadrature { X, Y };

// Reduce a composite-space density matrix to one subsystem.
DenseMat partial_trace(const DenseMat& rho, Subsystem keep, const HilbertSpec& spec);

cplx expectation(const SparseMat& op, const DenseMat& rho);
cplx expectation(const DenseMat& op, const DenseMat& rho);

// Var(Q) = <Q^2> - <Q>^2 for a single-mode state, from <o>, <o^2>, <o^dag o>.
double quadrature_variance(const DenseMat& rho_mode, Quadrature quad);

// Uhlmann fidelity Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)). Inputs are clamped
// (negative eigenvalues from truncation set to zero) and renormalized before
// use; throws std::invalid_argument if an input is non-Hermitian beyond 1e-8.
double fidelity(const DenseMat& rho1, const DenseMat& rho2);

// 0.5 * trace norm of (rho1 - rho2).
double trace_distance(const DenseMat& rho1, const DenseMat& rho2);

double purity(const DenseMat& rho);

// Wigner function W(alpha) = (2/pi) Tr[rho D(2 alpha) P] (displaced parity)
// evaluated on the given phase-space points. Uses the Laguerre-series matrix
// elements of the displacement operator; integrates to 1 over the plane.
std::vector<double> wigner(const DenseMat& rho_mode, const std::vector<cplx>& points);

// <m|D(beta)|n> on a truncated Fock ladder; exposed for validation.
DenseMat displacement_operator(int dim, cplx beta);

// Reference states.
DenseMat basis_state(int dim, int n);
DenseMat coherent_state(int dim, cplx alpha);
DenseMat squeezed_vacuum(int dim, double r, double theta);
Eigen::VectorXcd squeezed_vacuum_ket(int dim, double r, double theta);

}  // namespace sqz

#endif  // SQZ_OBSERVABLES_HPP
