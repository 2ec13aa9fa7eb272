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

#ifndef SQZ_DYNAMICS_HPP
#define SQZ_DYNAMICS_HPP

#include <vector>

#include "sqz/liouvillian.hpp"
#include "sqz/operator_algebra.hpp"

namespace sqz {

// |0>_atom x vacuum x vacuum on the composite space.
DenseMat ground_vacuum_state(const HilbertSpec& spec);

// Diagnostics for the density-matrix invariants; callers decide how strict
// to be (solvers never repair states silently).
struct StateDiagnostics {
  double hermiticity_defect = 0.0;  // max|rho - rho^dag|
  double trace_defect = 0.0;        // |tr(rho) - 1|
  double min_eigenvalue = 0.0;
};

StateDiagnostics diagnose_state(const DenseMat& rho);

// True iff Hermitian within 1e-10, unit trace within 1e-10 and
// min eigenvalue >= -1e-8 (truncation/solver slack).
bool is_physical_state(const DenseMat& rho);

struct EvolveOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
  double t_final = 100.0;
  int n_samples = 51;
  DenseMat initial_state;  // empty -> ground_vacuum_state-sized caller must set
};

struct EvolveSample {
  double t = 0.0;
  DenseMat rho;
};

// Adaptive TR-BDF2 (one-step L-stable pair of trapezoidal and BDF2 stages)
// with quadratic dense output for sampling. Throws StiffnessError if the
// step size collapses.
std::vector<EvolveSample> evolve(const Liouvillian& L, const EvolveOptions& opts);

enum class SteadyMethod { DirectLU, IterativeKrylov };

struct SteadyStateOptions {
  SteadyMethod method = SteadyMethod::DirectLU;
  double residual_tol = 1e-10;
  int max_iterations = 8000;  // Krylov budget
};

// Stationary density matrix from the constrained linear system. Trace
// preservation makes the rows of L addressing diagonal entries sum to zero,
// so one of them (row 0) is redundant and is replaced by the trace
// constraint sum_k rho_kk = 1, scaled to match the magnitude of L.
DenseMat steady_state(const Liouvillian& L, const SteadyStateOptions& opts = {});

}  // namespace sqz

#endif  // SQZ_DYNAMICS_HPP
