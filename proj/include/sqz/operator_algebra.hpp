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

#ifndef SQZ_OPERATOR_ALGEBRA_HPP
#define SQZ_OPERATOR_ALGEBRA_HPP

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace sqz {

using cplx = std::complex<double>;
using DenseMat = Eigen::MatrixXcd;
using SparseMat = Eigen::SparseMatrix<cplx>;

// Truncation of the atom (fixed three levels) x cavity x mechanics space.
// Composite operators act on total_dim() basis states ordered with the
// mechanical index fastest: |i_atom, n_cav, n_mech> -> (i*Nc + n)*Nm + m.
struct HilbertSpec {
  int cavity_dim = 12;
  int mech_dim = 12;
  static constexpr int atom_dim = 3;

  int total_dim() const { return atom_dim * cavity_dim * mech_dim; }
  void validate() const;  // throws std::invalid_argument on bad cutoffs
};

enum class Subsystem { Atom, Cavity, Mech };

// Bosonic annihilation operator on a dim-level Fock ladder: A[n-1,n] = sqrt(n).
SparseMat annihilation(int dim);
DenseMat annihilation_dense(int dim);

// Atomic transition operator |i><j| on the three-level space. i > j is a
// raising operator, i == j a level projector.
DenseMat atomic_ladder(int i, int j);

SparseMat identity_sparse(int dim);

// Kronecker product helper with the row-major index convention
// (AxB)[i*rB + k, j*cB + l] = A[i,j] B[k,l].
SparseMat kron(const SparseMat& A, const SparseMat& B);

// Lift a single-subsystem operator to the composite space by tensoring
// identities on the other factors, in the fixed Atom x Cavity x Mech order.
SparseMat embed(const DenseMat& op, Subsystem sub, const HilbertSpec& spec);

}  // namespace sqz

#endif  // SQZ_OPERATOR_ALGEBRA_HPP
