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

#include "sqz/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace sqz {

namespace {

void require_hermitian(const DenseMat& rho, const char* who) {
  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * scale) {
    throw std::invalid_argument(std::string(who) + ": input is not Hermitian");
  }
}

// Eigenvalue clamp for truncation/roundoff negativity, then unit trace.
DenseMat clamp_renormalize(const DenseMat& rho) {
  Eigen::SelfAdjointEigenSolver<DenseMat> es(0.5 * (rho + rho.adjoint()));
  Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0);
  const double tr = w.sum();
  if (tr <= 0.0) {
    throw std::invalid_argument("density matrix has no positive weight");
  }
  return es.eigenvectors() * (w / tr).asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DenseMat partial_trace(const DenseMat& rho, Subsystem keep, const HilbertSpec& spec) {
  spec.validate();
  const int na = HilbertSpec::atom_dim, nc = spec.cavity_dim, nm = spec.mech_dim;
  if (rho.rows() != spec.total_dim() || rho.cols() != spec.total_dim()) {
    throw std::invalid_argument("partial_trace: state dimension does not match spec");
  }
  auto idx = [nc, nm](int i, int c, int m) { return (i * nc + c) * nm + m; };
  const int keep_dim = keep == Subsystem::Atom ? na : keep == Subsystem::Cavity ? nc : nm;
  DenseMat out = DenseMat::Zero(keep_dim, keep_dim);
  for (int i = 0; i < na; ++i) {
    for (int c = 0; c < nc; ++c) {
      for (int m = 0; m < nm; ++m) {
        switch (keep) {
          case Subsystem::Atom:
            for (int j = 0; j < na; ++j) out(i, j) += rho(idx(i, c, m), idx(j, c, m));
            break;
          case Subsystem::Cavity:
            for (int d = 0; d < nc; ++d) out(c, d) += rho(idx(i, c, m), idx(i, d, m));
            break;
          case Subsystem::Mech:
            for (int n = 0; n < nm; ++n) out(m, n) += rho(idx(i, c, m), idx(i, c, n));
            break;
        }
      }
    }
  }
  return out;
}

cplx expectation(const SparseMat& op, const DenseMat& rho) {
  return (op * rho).eval().trace();
}

cplx expectation(const DenseMat& op, const DenseMat& rho) { return (op * rho).trace(); }

double quadrature_variance(const DenseMat& rho_mode, Quadrature quad) {
  const int dim = int(rho_mode.rows());
  const DenseMat o = annihilation_dense(dim);
  const cplx mean = expectation(o, rho_mode);
  const cplx o2 = expectation(DenseMat(o * o), rho_mode);
  const double n = expectation(DenseMat(o.adjoint() * o), rho_mode).real();
  if (quad == Quadrature::X) {
    return (1.0 + 2.0 * n + 2.0 * o2.real()) / 4.0 - mean.real() * mean.real();
  }
  return (1.0 + 2.0 * n - 2.0 * o2.real()) / 4.0 - mean.imag() * mean.imag();
}

double fidelity(const DenseMat& rho1, const DenseMat& rho2) {
  if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  require_hermitian(rho1, "fidelity");
  require_hermitian(rho2, "fidelity");
  const DenseMat r1 = clamp_renormalize(rho1);
  const DenseMat r2 = clamp_renormalize(rho2);

  // Eigenvalues below dim * eps * max are solver noise around zero; the square
  // root would amplify each to ~1e-8, so cut them at the rank tolerance first.
  const auto truncated_sqrt = [](const Eigen::VectorXd& w) {
    const double cut =
        double(w.size()) * std::numeric_limits<double>::epsilon() * std::max(w.maxCoeff(), 0.0);
    return Eigen::VectorXd((w.array() < cut).select(0.0, w).cwiseSqrt());
  };

  Eigen::SelfAdjointEigenSolver<DenseMat> es(r1);
  const Eigen::VectorXd sqw = truncated_sqrt(es.eigenvalues());
  const DenseMat sqrt1 = es.eigenvectors() * sqw.asDiagonal() * es.eigenvectors().adjoint();

  DenseMat inner = sqrt1 * r2 * sqrt1;
  inner = 0.5 * (inner + inner.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMat> es2(inner);
  const double f = truncated_sqrt(es2.eigenvalues()).sum();
  return std::clamp(f, 0.0, 1.0);
}

double trace_distance(const DenseMat& rho1, const DenseMat& rho2) {
  DenseMat diff = rho1 - rho2;
  diff = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMat> es(diff);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double purity(const DenseMat& rho) { return (rho * rho).trace().real(); }

DenseMat displacement_operator(int dim, cplx beta) {
  if (dim < 2) {
    throw std::invalid_argument("displacement_operator: dim must be >= 2");
  }
  const double x = std::norm(beta);
  const double gauss = std::exp(-0.5 * x);
  DenseMat D(dim, dim);
  // Fill diagonal band k = m - n using the generalized-Laguerre recurrence
  //   (n+1) L_{n+1}^{(k)} = (2n + 1 + k - x) L_n^{(k)} - (n + k) L_{n-1}^{(k)}.
  for (int k = 0; k < dim; ++k) {
    double pref = 1.0;  // sqrt(n! / (n+k)!) at n = 0 is 1/sqrt(k!)
    for (int j = 1; j <= k; ++j) pref /= std::sqrt(double(j));
    cplx beta_k = std::pow(beta, k);
    cplx mconj_k = std::pow(-std::conj(beta), k);
    double Lm1 = 0.0, L = 1.0;
    for (int n = 0; n + k < dim; ++n) {
      if (n > 0) {
        pref *= std::sqrt(double(n) / double(n + k));
        const double Lnext = ((2.0 * (n - 1) + 1.0 + k - x) * L - (n - 1 + k) * Lm1) / double(n);
        Lm1 = L;
        L = Lnext;
      }
      D(n + k, n) = gauss * pref * beta_k * L;
      if (k > 0) D(n, n + k) = gauss * pref * mconj_k * L;
    }
  }
  return D;
}

std::vector<double> wigner(const DenseMat& rho_mode, const std::vector<cplx>& points) {
  require_hermitian(rho_mode, "wigner");
  const DenseMat rho = clamp_renormalize(rho_mode);
  const int dim = int(rho.rows());
  std::vector<double> out;
  out.reserve(points.size());
  for (const cplx& alpha : points) {
    // The parity identity D(a) P D(a)+ = D(2a) P keeps the trace inside the
    // occupied block, where the Laguerre elements of D are exact; summing
    // parity after a truncated similarity transform would leak tail weight.
    const DenseMat D2 = displacement_operator(dim, 2.0 * alpha);
    cplx acc = 0.0;
    for (int m = 0; m < dim; ++m) {
      const double parity = (m % 2 == 0) ? 1.0 : -1.0;
      for (int n = 0; n < dim; ++n) {
        acc += rho(m, n) * D2(n, m) * parity;
      }
    }
    out.push_back(acc.real() * 2.0 / std::numbers::pi);
  }
  return out;
}

DenseMat basis_state(int dim, int n) {
  if (n < 0 || n >= dim) {
    throw std::invalid_argument("basis_state: level out of range");
  }
  DenseMat rho = DenseMat::Zero(dim, dim);
  rho(n, n) = 1.0;
  return rho;
}

DenseMat coherent_state(int dim, cplx alpha) {
  Eigen::VectorXcd ket(dim);
  ket(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n) ket(n) = ket(n - 1) * alpha / std::sqrt(double(n));
  ket.normalize();
  return ket * ket.adjoint();
}

Eigen::VectorXcd squeezed_vacuum_ket(int dim, double r, double theta) {
  if (r < 0.0) {
    throw std::invalid_argument("squeezed_vacuum: r must be >= 0");
  }
  Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(dim);
  const cplx factor = -std::exp(cplx(0.0, theta)) * std::tanh(r);
  cplx amp = 1.0 / std::sqrt(std::cosh(r));
  ket(0) = amp;
  for (int k = 1; 2 * k < dim; ++k) {
    amp *= factor * std::sqrt(double(2 * k) * double(2 * k - 1)) / double(2 * k);
    ket(2 * k) = amp;
  }
  ket.normalize();  // truncated tail mass
  return ket;
}

DenseMat squeezed_vacuum(int dim, double r, double theta) {
  const Eigen::VectorXcd ket = squeezed_vacuum_ket(dim, r, theta);
  return ket * ket.adjoint();
}

}  // namespace sqz
