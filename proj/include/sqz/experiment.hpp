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

#ifndef SQZ_EXPERIMENT_HPP
#define SQZ_EXPERIMENT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqz/config.hpp"
#include "sqz/dynamics.hpp"

namespace sqz {

// Scientific notation with 12 digits after the point; NaN prints as "nan".
// All CSV output funnels through this so runs are bit-identical.
std::string format_number(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);  // throws on column-count mismatch
  std::string to_csv() const;
};

struct CutoffStep {
  HilbertSpec spec;
  std::vector<double> observables;
  double max_delta = 0.0;  // largest observable change vs the previous rung
};

struct CutoffResult {
  HilbertSpec converged;
  std::vector<CutoffStep> trail;
  std::string trail_string() const;
};

using CutoffTarget = std::function<std::vector<double>(const HilbertSpec&)>;

// Climb equal cavity/mech cutoffs in steps of 2 until every target
// observable moves by less than cutoff_tol; the returned spec is the rung
// below the certifying solve. Throws UnconvergedCutoffError (carrying the
// trail) once the next rung would exceed cap.
CutoffResult converge_cutoff(const CutoffTarget& target, double cutoff_tol, int cap,
                             int start_dim = 2);

// Same ladder driven by a config: the target observables are the headline
// quantities of the configured experiment at its base parameters.
CutoffResult converge_cutoff(const ExperimentConfig& config);

struct SteadyPoint {
  DenseMat rho;
  double residual = 0.0;
};

// Build the configured model (coherent pump, or squeezed reservoir when bath
// is set) and solve for its stationary state.
SteadyPoint solve_steady(const SystemParams& params,
                         const std::optional<SqueezedBathParams>& bath,
                         const HilbertSpec& spec, const SteadyStateOptions& solver);

struct RunResult {
  Table table;
  std::string sidecar_json;  // schema_version, config echo, wall time, flags
  double wall_seconds = 0.0;
};

RunResult run_sweep_q(const ExperimentConfig& config);
RunResult run_sweep_r(const ExperimentConfig& config);
RunResult run_fidelity_maps(const ExperimentConfig& config);
RunResult run_time_evolution(const ExperimentConfig& config);
RunResult run_stability(const ExperimentConfig& config);
RunResult run_wigner(const ExperimentConfig& config);

RunResult run_experiment(const ExperimentConfig& config);

}  // namespace sqz

#endif  // SQZ_EXPERIMENT_HPP
