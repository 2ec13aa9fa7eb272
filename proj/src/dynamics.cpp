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

#include "sqz/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "sqz/errors.hpp"

namespace sqz {

namespace {

// TR-BDF2 coefficients. gamma is the trapezoidal substep fraction; both
// implicit stages share the matrix (I - (gamma/2) h L), so one factorization
// serves a whole run of equal-sized steps.
constexpr double k_gamma = 2.0 - std::numbers::sqrt2;
constexpr double k_d = k_gamma / 2.0;

double inf_norm(const SparseMat& m) {
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(m.rows());
  for (int outer = 0; outer < m.outerSize(); ++outer) {
    for (SparseMat::InnerIterator it(m, outer); it; ++it) {
      row_sums[it.row()] += std::abs(it.value());
    }
  }
  return m.nonZeros() == 0 ? 0.0 : row_sums.maxCoeff();
}

double wrms_norm(const Eigen::VectorXcd& err, const Eigen::VectorXcd& y0,
                 const Eigen::VectorXcd& y1, double rtol, double atol) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double q = std::abs(err[i]) / scale;
    acc += q * q;
  }
  return std::sqrt(acc / static_cast<double>(err.size()));
}

}  // namespace

DenseMat ground_vacuum_state(const HilbertSpec& spec) {
  spec.validate();
  DenseMat rho = DenseMat::Zero(spec.total_dim(), spec.total_dim());
  rho(0, 0) = 1.0;  // index 0 is atom level 0, both oscillators in vacuum
  return rho;
}

StateDiagnostics diagnose_state(const DenseMat& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw std::invalid_argument("diagnose_state: matrix must be square and nonempty");
  }
  StateDiagnostics diag;
  diag.hermiticity_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  diag.trace_defect = std::abs(rho.trace() - cplx(1.0, 0.0));
  DenseMat herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMat> es(herm, Eigen::EigenvaluesOnly);
  diag.min_eigenvalue = es.eigenvalues().minCoeff();
  return diag;
}

bool is_physical_state(const DenseMat& rho) {
  const StateDiagnostics diag = diagnose_state(rho);
  return diag.hermiticity_defect <= 1e-10 && diag.trace_defect <= 1e-10 &&
         diag.min_eigenvalue >= -1e-8;
}

std::vector<EvolveSample> evolve(const Liouvillian& L, const EvolveOptions& opts) {
  if (!(opts.t_final > 0.0) || !std::isfinite(opts.t_final)) {
    throw std::invalid_argument("evolve: t_final must be positive and finite");
  }
  if (opts.n_samples < 1) {
    throw std::invalid_argument("evolve: n_samples must be at least 1");
  }
  if (!(opts.rtol > 0.0) || !(opts.atol > 0.0)) {
    throw std::invalid_argument("evolve: rtol and atol must be positive");
  }
  const Eigen::Index dim = L.dim;
  if (opts.initial_state.rows() != dim || opts.initial_state.cols() != dim) {
    throw std::invalid_argument("evolve: initial state does not match the generator dimension");
  }

  const SparseMat& gen = L.matrix;
  const Eigen::Index size = gen.rows();
  Eigen::VectorXcd x = vec(opts.initial_state);

  std::vector<double> sample_times;
  sample_times.reserve(opts.n_samples);
  if (opts.n_samples == 1) {
    sample_times.push_back(opts.t_final);
  } else {
    for (int k = 0; k < opts.n_samples; ++k) {
      sample_times.push_back(opts.t_final * k / (opts.n_samples - 1));
    }
  }

  std::vector<EvolveSample> samples;
  samples.reserve(sample_times.size());
  std::size_t next_sample = 0;
  if (sample_times[0] == 0.0) {
    samples.push_back({0.0, opts.initial_state});
    ++next_sample;
  }

  // First step guess from the generator's scale; the controller corrects it
  // within a couple of steps either way.
  const double gen_norm = inf_norm(gen);
  double h = std::min(opts.t_final / 10.0, 1.0 / std::max(gen_norm, 1e-12));

  SparseMat identity(size, size);
  identity.setIdentity();
  Eigen::SparseLU<SparseMat, Eigen::COLAMDOrdering<int>> lu;
  double factored_h = -1.0;
  auto refactor = [&](double step) {
    SparseMat lhs = identity - SparseMat(cplx(k_d * step, 0.0) * gen);
    lhs.makeCompressed();
    lu.compute(lhs);
    if (lu.info() != Eigen::Success) {
      throw SingularSystemError("evolve: stage matrix factorization failed: " +
                                lu.lastErrorMessage());
    }
    factored_h = step;
  };

  const double stage2_scale = 1.0 / (k_gamma * (2.0 - k_gamma));
  const double stage2_prev = (1.0 - k_gamma) * (1.0 - k_gamma) * stage2_scale;
  // Embedded-pair difference: (h/3) [(sqrt2-1) f_n - f_gamma + (2-sqrt2) f_{n+1}].
  const double est_c0 = (std::numbers::sqrt2 - 1.0) / 3.0;
  const double est_c1 = -1.0 / 3.0;
  const double est_c2 = (2.0 - std::numbers::sqrt2) / 3.0;

  Eigen::VectorXcd f0 = gen * x;
  double t = 0.0;
  long n_steps = 0;
  constexpr long k_max_steps = 2000000;

  while (t < opts.t_final * (1.0 - 1e-14)) {
    if (++n_steps > k_max_steps) {
      throw StiffnessError("evolve: step budget exhausted", t, h);
    }
    h = std::min(h, opts.t_final - t);
    if (h < 1e-14 * std::max(1.0, t)) {
      throw StiffnessError("evolve: step size underflow", t, h);
    }
    if (factored_h <= 0.0 || std::abs(h - factored_h) > 1e-14 * factored_h) {
      refactor(h);
    }

    const Eigen::VectorXcd y_gamma = lu.solve(x + (k_d * h) * f0);
    const Eigen::VectorXcd f_gamma = gen * y_gamma;
    const Eigen::VectorXcd y_next = lu.solve(stage2_scale * y_gamma - stage2_prev * x);
    const Eigen::VectorXcd f_next = gen * y_next;

    const Eigen::VectorXcd est = h * (est_c0 * f0 + est_c1 * f_gamma + est_c2 * f_next);
    const Eigen::VectorXcd est_filtered = lu.solve(est);  // damp the stiff components
    double err = wrms_norm(est_filtered, x, y_next, opts.rtol, opts.atol);
    if (!std::isfinite(err)) err = 1e6;

    if (err <= 1.0) {
      // Quadratic dense output through (t, x), (t + gamma h, y_gamma),
      // (t + h, y_next) covers every sample point inside the step.
      const double t_end = t + h;
      while (next_sample < sample_times.size() &&
             sample_times[next_sample] <= t_end + 1e-12 * opts.t_final) {
        const double theta = std::clamp((sample_times[next_sample] - t) / h, 0.0, 1.0);
        const double c_n = (theta - k_gamma) * (theta - 1.0) / k_gamma;
        const double c_g = theta * (1.0 - theta) / (k_gamma * (1.0 - k_gamma));
        const double c_1 = theta * (theta - k_gamma) / (1.0 - k_gamma);
        Eigen::VectorXcd interp = c_n * x + c_g * y_gamma + c_1 * y_next;
        samples.push_back({sample_times[next_sample], unvec(interp, dim)});
        ++next_sample;
      }
      t = t_end;
      x = y_next;
      f0 = f_next;
    }

    double factor = std::clamp(0.9 * std::pow(err, -1.0 / 3.0), 0.2, 5.0);
    if (err > 1.0) {
      factor = std::min(factor, 0.5);
    } else if (factor > 0.85 && factor < 1.25) {
      factor = 1.0;  // hysteresis: keep the current factorization alive
    }
    h *= factor;
  }

  // Floating-point residue can leave the terminal sample pending.
  while (next_sample < sample_times.size()) {
    samples.push_back({sample_times[next_sample], unvec(x, dim)});
    ++next_sample;
  }
  return samples;
}

namespace {

Eigen::VectorXcd solve_constrained(const SparseMat& sys, const Eigen::VectorXcd& rhs,
                                   const SteadyStateOptions& opts) {
  if (opts.method == SteadyMethod::DirectLU) {
    Eigen::SparseLU<SparseMat, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(sys);
    if (lu.info() != Eigen::Success) {
      throw SingularSystemError("steady_state: LU factorization failed: " +
                                lu.lastErrorMessage());
    }
    Eigen::VectorXcd x = lu.solve(rhs);
    if (lu.info() != Eigen::Success) {
      throw SingularSystemError("steady_state: LU back-substitution failed");
    }
    return x;
  }

  Eigen::BiCGSTAB<SparseMat, Eigen::IncompleteLUT<cplx>> krylov;
  krylov.preconditioner().setDroptol(1e-6);
  krylov.preconditioner().setFillfactor(40);
  krylov.setMaxIterations(opts.max_iterations);
  krylov.setTolerance(std::max(opts.residual_tol * 1e-2, 1e-14));
  krylov.compute(sys);
  if (krylov.info() != Eigen::Success) {
    throw ConvergenceError("steady_state: incomplete-LU preconditioner failed", 0.0);
  }
  Eigen::VectorXcd x = krylov.solve(rhs);
  if (krylov.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "steady_state: Krylov solve stalled after " << krylov.iterations()
        << " iterations (relative residual " << krylov.error() << ")";
    throw ConvergenceError(msg.str(), krylov.error());
  }
  return x;
}

}  // namespace

DenseMat steady_state(const Liouvillian& L, const SteadyStateOptions& opts) {
  if (!(opts.residual_tol > 0.0)) {
    throw std::invalid_argument("steady_state: residual_tol must be positive");
  }
  if (opts.max_iterations < 1) {
    throw std::invalid_argument("steady_state: max_iterations must be positive");
  }
  const Eigen::Index dim = L.dim;
  const SparseMat& gen = L.matrix;
  const Eigen::Index size = gen.rows();

  // Scale the trace row to the generator's diagonal so the constrained
  // system stays well conditioned.
  double weight = gen.diagonal().cwiseAbs().sum() / static_cast<double>(size);
  if (!(weight > 0.0)) weight = 1.0;

  std::vector<Eigen::Triplet<cplx>> triplets;
  triplets.reserve(static_cast<std::size_t>(gen.nonZeros()) + dim);
  for (int outer = 0; outer < gen.outerSize(); ++outer) {
    for (SparseMat::InnerIterator it(gen, outer); it; ++it) {
      if (it.row() == 0) continue;  // replaced by the trace constraint
      triplets.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                            it.value());
    }
  }
  for (Eigen::Index k = 0; k < dim; ++k) {
    triplets.emplace_back(0, static_cast<int>(k * dim + k), cplx(weight, 0.0));
  }
  SparseMat sys(size, size);
  sys.setFromTriplets(triplets.begin(), triplets.end());
  sys.makeCompressed();

  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(size);
  rhs[0] = cplx(weight, 0.0);

  Eigen::VectorXcd x = solve_constrained(sys, rhs, opts);

  cplx trace = 0.0;
  for (Eigen::Index k = 0; k < dim; ++k) trace += x[k * dim + k];
  if (std::abs(trace) < 1e-12) {
    throw SingularSystemError("steady_state: solution has (near) zero trace");
  }
  x /= trace;

  DenseMat rho = unvec(x, dim);
  rho = 0.5 * (rho + rho.adjoint()).eval();

  const double residual = (gen * vec(rho)).cwiseAbs().maxCoeff();
  if (residual > opts.residual_tol) {
    throw ConvergenceError("steady_state: stationarity residual above tolerance", residual);
  }
  return rho;
}

}  // namespace sqz
