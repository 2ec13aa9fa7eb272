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

#include "sqz/operator_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

namespace sqz {

void HilbertSpec::validate() const {
  if (cavity_dim < 2 || mech_dim < 2) {
    throw std::invalid_argument("HilbertSpec: cavity_dim and mech_dim must be >= 2, got (" +
                                std::to_string(cavity_dim) + ", " + std::to_string(mech_dim) +
                                ")");
  }
}

SparseMat annihilation(int dim) {
  if (dim < 2) {
    throw std::invalid_argument("annihilation: dim must be >= 2, got " + std::to_string(dim));
  }
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(dim - 1);
  for (int n = 1; n < dim; ++n) {
    trip.emplace_back(n - 1, n, cplx(std::sqrt(double(n)), 0.0));
  }
  SparseMat a(dim, dim);
  a.setFromTriplets(trip.begin(), trip.end());
  return a;
}

DenseMat annihilation_dense(int dim) { return DenseMat(annihilation(dim)); }

DenseMat atomic_ladder(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2) {
    throw std::invalid_argument("atomic_ladder: level indices must lie in {0,1,2}");
  }
  DenseMat op = DenseMat::Zero(3, 3);
  op(i, j) = 1.0;
  return op;
}

SparseMat identity_sparse(int dim) {
  SparseMat id(dim, dim);
  id.setIdentity();
  return id;
}

SparseMat kron(const SparseMat& A, const SparseMat& B) {
  SparseMat out(A.rows() * B.rows(), A.cols() * B.cols());
  out = Eigen::kroneckerProduct(A, B);
  return out;
}

SparseMat embed(const DenseMat& op, Subsystem sub, const HilbertSpec& spec) {
  spec.validate();
  const int sub_dim = sub == Subsystem::Atom    ? HilbertSpec::atom_dim
                      : sub == Subsystem::Cavity ? spec.cavity_dim
                                                 : spec.mech_dim;
  if (op.rows() != sub_dim || op.cols() != sub_dim) {
    throw std::invalid_argument("embed: operator is " + std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()) + " but subsystem dimension is " +
                                std::to_string(sub_dim));
  }
  SparseMat sp = op.sparseView();
  switch (sub) {
    case Subsystem::Atom:
      return kron(kron(sp, identity_sparse(spec.cavity_dim)), identity_sparse(spec.mech_dim));
    case Subsystem::Cavity:
      return kron(kron(identity_sparse(HilbertSpec::atom_dim), sp),
                  identity_sparse(spec.mech_dim));
    default:
      return kron(kron(identity_sparse(HilbertSpec::atom_dim), identity_sparse(spec.cavity_dim)),
                  sp);
  }
}

}  // namespace sqz
