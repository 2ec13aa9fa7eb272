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

#ifndef SQZ_LIOUVILLIAN_HPP
#define SQZ_LIOUVILLIAN_HPP

#include <vector>

#include "sqz/model.hpp"
#include "sqz/operator_algebra.hpp"

namespace sqz {

// Vectorization is column-stacking: vec(rho) stacks columns, so
// vec(A rho B) = (B^T kron A) vec(rho). Eigen matrices are column-major,
// which makes vec() a plain memory view.
Eigen::VectorXcd vec(const DenseMat& rho);
DenseMat unvec(const Eigen::VectorXcd& v, int dim);

struct Liouvillian {
  SparseMat matrix;  // dim^2 x dim^2
  int dim = 0;

  // d(rho)/dt for a given density matrix; mostly used by tests.
  DenseMat apply(const DenseMat& rho) const;
};

// -i [(I kron H) - (H^T kron I)], the commutator part of d(rho)/dt.
SparseMat hamiltonian_super(const SparseMat& H);

// Superoperator of (rate/2) L[op] for a standard channel, or of
// (rate/2) L_sq[op] for a squeezed-vacuum channel:
//   L_sq[b] = (N+1)(2 b rho b+ - b+b rho - rho b+b)
//           +  N  (2 b+ rho b - bb+ rho - rho bb+)
//           +  M  (2 b+ rho b+ - b+b+ rho - rho b+b+)
//           +  M* (2 b rho b  - bb rho  - rho bb).
SparseMat dissipator_super(const DissipationChannel& channel, int dim);

Liouvillian build_liouvillian(const SparseMat& H,
                              const std::vector<DissipationChannel>& channels);

}  // namespace sqz

#endif  // SQZ_LIOUVILLIAN_HPP
