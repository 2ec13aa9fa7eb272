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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sqz/config.hpp"
#include "sqz/experiment.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write to '" + path + "' failed");
  }
}

// The fidelity-map subcommand serves both map kinds; a config that sweeps
// g_ac means the coupling/coupling map, otherwise the pump/coupling map.
sqz::ExperimentKind infer_map_kind(const sqz::ExperimentConfig& cfg) {
  if (cfg.raw.count("experiment")) {
    if (cfg.experiment == sqz::ExperimentKind::FidelityMapQGcm ||
        cfg.experiment == sqz::ExperimentKind::FidelityMapGacGcm) {
      return cfg.experiment;
    }
    throw std::invalid_argument("config experiment '" + sqz::to_string(cfg.experiment) +
                                "' does not match the fidelity-map subcommand");
  }
  return cfg.sweeps.count("g_ac") ? sqz::ExperimentKind::FidelityMapGacGcm
                                  : sqz::ExperimentKind::FidelityMapQGcm;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steady-state squeezing transfer: sweeps, maps, time evolution"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  int threads = 0;
  long long seed = 0;
  app.add_option("-c,--config", config_path, "run configuration file")->required();
  app.add_option("-o,--out", out_path, "output CSV path (overrides output.path)");
  app.add_option("-t,--threads", threads, "worker threads for grid points");
  app.add_option("--seed", seed, "accepted for interface parity; nothing is stochastic");

  auto* cmd_sweep_q = app.add_subcommand("sweep-q", "pump-amplitude sweep of Y variances");
  auto* cmd_sweep_r = app.add_subcommand("sweep-r", "reservoir-squeezing sweep of X variances");
  auto* cmd_map = app.add_subcommand("fidelity-map", "cavity/mech fidelity over a coupling grid");
  auto* cmd_timeevo = app.add_subcommand("timeevo", "variance time series from vacuum");
  auto* cmd_stability = app.add_subcommand("stability", "moment-matrix spectra and threshold");
  auto* cmd_wigner = app.add_subcommand("wigner", "phase-space distribution of a reduced mode");
  auto* cmd_converge = app.add_subcommand("converge", "report the cutoff ladder for the config");
  for (auto* sub : {cmd_sweep_q, cmd_sweep_r, cmd_map, cmd_timeevo, cmd_stability, cmd_wigner,
                    cmd_converge}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    sqz::ExperimentConfig cfg = sqz::load_config_file(config_path);
    if (!out_path.empty()) cfg.output_path = out_path;
    if (threads > 0) cfg.threads = threads;

    auto fix_kind = [&cfg](sqz::ExperimentKind want) {
      if (cfg.raw.count("experiment") && cfg.experiment != want) {
        throw std::invalid_argument("config experiment '" + sqz::to_string(cfg.experiment) +
                                    "' does not match the chosen subcommand");
      }
      cfg.experiment = want;
    };

    if (app.got_subcommand(cmd_converge)) {
      if (!cfg.raw.count("experiment")) {
        throw std::invalid_argument("converge needs an explicit 'experiment = ...' in the config");
      }
      const sqz::CutoffResult ladder = sqz::converge_cutoff(cfg);
      std::cout << "converged: " << ladder.converged.cavity_dim << "x"
                << ladder.converged.mech_dim << "\n"
                << "trail: " << ladder.trail_string() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_sweep_q)) {
      fix_kind(sqz::ExperimentKind::SweepQ);
    } else if (app.got_subcommand(cmd_sweep_r)) {
      fix_kind(sqz::ExperimentKind::SweepR);
    } else if (app.got_subcommand(cmd_map)) {
      cfg.experiment = infer_map_kind(cfg);
    } else if (app.got_subcommand(cmd_timeevo)) {
      fix_kind(sqz::ExperimentKind::TimeEvolution);
    } else if (app.got_subcommand(cmd_stability)) {
      fix_kind(sqz::ExperimentKind::Stability);
    } else if (app.got_subcommand(cmd_wigner)) {
      fix_kind(sqz::ExperimentKind::Wigner);
    }
    cfg.validate();

    const sqz::RunResult result = sqz::run_experiment(cfg);
    write_file(cfg.output_path, result.table.to_csv());
    write_file(cfg.output_path + ".json", result.sidecar_json);
    std::cout << sqz::to_string(cfg.experiment) << ": " << result.table.rows.size()
              << " rows in " << result.wall_seconds << " s -> " << cfg.output_path << " (+ "
              << cfg.output_path << ".json)\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
