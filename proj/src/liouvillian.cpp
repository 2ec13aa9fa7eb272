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

#include "sqz/liouvillian.hpp"

#include <stdexcept>

namespace sqz {

Eigen::VectorXcd vec(const DenseMat& rho) {
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

DenseMat unvec(const Eigen::VectorXcd& v, int dim) {
  return Eigen::Map<const DenseMat>(v.data(), dim, dim);
}

DenseMat Liouvillian::apply(const DenseMat& rho) const {
  return unvec(matrix * vec(rho), dim);
}

SparseMat hamiltonian_super(const SparseMat& H) {
  const int d = int(H.rows());
  const SparseMat id = identity_sparse(d);
  const cplx mi{0.0, -1.0};
  return mi * SparseMat(kron(id, H) - kron(SparseMat(H.transpose()), id));
}

namespace {

// (rate/2) [2 A rho B - BA rho - rho BA] vectorized; the standard dissipator
// is the A = O, B = O^dag case and the squeezed channel adds anomalous terms
// with A, B both raising or both lowering.
SparseMat sandwich_super(const SparseMat& A, const SparseMat& B, const SparseMat& id) {
  const SparseMat BA = SparseMat(B * A);
  return 2.0 * kron(SparseMat(B.transpose()), A) - kron(id, BA) -
         kron(SparseMat(BA.transpose()), id);
}

}  // namespace

SparseMat dissipator_super(const DissipationChannel& channel, int dim) {
  if (channel.op.rows() != dim || channel.op.cols() != dim) {
    throw std::invalid_argument("dissipator_super: channel operator dimension mismatch");
  }
  if (channel.rate < 0.0) {
    throw std::invalid_argument("dissipator_super: negative rate");
  }
  const SparseMat id = identity_sparse(dim);
  const SparseMat& o = channel.op;
  const SparseMat od = SparseMat(o.adjoint());

  SparseMat out = sandwich_super(o, od, id);
  if (channel.kind == ChannelKind::SqueezedVacuum) {
    if (!channel.bath) {
      throw std::invalid_argument("dissipator_super: squeezed channel without bath parameters");
    }
    const double N = channel.bath->N();
    const cplx M = channel.bath->M();
    out = (N + 1.0) * out + N * sandwich_super(od, o, id) + M * sandwich_super(od, od, id) +
          std::conj(M) * sandwich_super(o, o, id);
  }
  return SparseMat((channel.rate / 2.0) * out);
}

Liouvillian build_liouvillian(const SparseMat& H,
                              const std::vector<DissipationChannel>& channels) {
  const int d = int(H.rows());
  if (H.cols() != d) {
    throw std::invalid_argument("build_liouvillian: Hamiltonian must be square");
  }
  Liouvillian L;
  L.dim = d;
  L.matrix = hamiltonian_super(H);
  for (const auto& ch : channels) {
    if (ch.rate == 0.0) continue;  // structural zero, skip the assembly work
    L.matrix += dissipator_super(ch, d);
  }
  L.matrix.prune(cplx(0.0, 0.0));
  L.matrix.makeCompressed();
  return L;
}

}  // namespace sqz
