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

#ifndef SQZ_ERRORS_HPP
#define SQZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqz {

// Base class for runtime failures of the numerical kernels. Precondition
// violations (bad dimensions, negative rates, ...) throw std::invalid_argument
// instead and are not recoverable by retrying with different solver settings.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive integrator drove the step size below its floor.
class StiffnessError : public SolverError {
 public:
  StiffnessError(const std::string& what, double t_fail, double h_fail)
      : SolverError(what), t(t_fail), h(h_fail) {}
  double t;  // time at which the step failed
  double h;  // rejected step size
};

// Iterative linear solver exhausted its iteration budget.
class ConvergenceError : public SolverError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : SolverError(what), residual(residual) {}
  double residual;
};

// Constrained steady-state system is singular (no unique stationary state).
class SingularSystemError : public SolverError {
 public:
  explicit SingularSystemError(const std::string& what) : SolverError(what) {}
};

// Cutoff search hit its cap without the observables settling.
class UnconvergedCutoffError : public SolverError {
 public:
  UnconvergedCutoffError(const std::string& what, std::string trail)
      : SolverError(what), trail(std::move(trail)) {}
  std::string trail;  // human-readable record of the attempted cutoffs
};

}  // namespace sqz

#endif  // SQZ_ERRORS_HPP
