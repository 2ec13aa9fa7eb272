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

#ifndef SQZ_CONFIG_HPP
#define SQZ_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqz/dynamics.hpp"
#include "sqz/model.hpp"
#include "sqz/operator_algebra.hpp"

namespace sqz {

enum class ExperimentKind {
  SweepQ,
  SweepR,
  FidelityMapQGcm,
  FidelityMapGacGcm,
  TimeEvolution,
  Stability,
  Wigner,
};

std::string to_string(ExperimentKind kind);

// Flat `key = value` text, one pair per line, `#` comments. Values are kept
// verbatim; typing happens in parse_experiment_config. Duplicate or malformed
// keys throw std::invalid_argument with the offending line number.
using KeyValueMap = std::map<std::string, std::string>;

KeyValueMap parse_config_text(const std::string& text);

// Numeric list forms accepted for sweeps:
//   1:5:9            linearly spaced, 9 points from 1 to 5 inclusive
//   log:1e-3:1e-1:5  log spaced
//   0.1,0.2,0.7      explicit comma list
std::vector<double> parse_value_list(const std::string& text);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::SweepQ;
  SystemParams params;
  std::optional<SqueezedBathParams> bath;
  HilbertSpec spec;
  std::map<std::string, std::vector<double>> sweeps;  // keys: q, r, g_cm, g_ac

  bool cutoff_auto = false;  // run the cutoff ladder per grid point
  double cutoff_tol = 1e-4;
  int cutoff_cap = 30;

  SteadyStateOptions solver;

  double evolve_t_final = 200.0;
  int evolve_n_samples = 101;
  double evolve_rtol = 1e-8;
  double evolve_atol = 1e-10;

  double wigner_extent = 2.0;  // phase-space grid half width
  int wigner_points = 41;      // grid points per axis
  Subsystem wigner_mode = Subsystem::Mech;

  std::string output_path = "out.csv";
  int threads = 1;

  KeyValueMap raw;  // verbatim echo for the metadata sidecar

  // Cross-field checks: swept symbols the experiment needs are present,
  // counts >= 2, everything finite, positive tolerances.
  void validate() const;
};

ExperimentConfig parse_experiment_config(const KeyValueMap& kv);
ExperimentConfig load_config_file(const std::string& path);

}  // namespace sqz

#endif  // SQZ_CONFIG_HPP
