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

#include "sqz/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sqz {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key + "' has non-numeric value '" + text + "'");
  }
  if (trim(text.substr(used)) != "") {
    throw std::invalid_argument("config: key '" + key + "' has trailing junk in '" + text + "'");
  }
  return value;
}

int parse_int(const std::string& text, const std::string& key) {
  const double v = parse_double(text, key);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw std::invalid_argument("config: key '" + key + "' expects an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

bool parse_bool(const std::string& text, const std::string& key) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw std::invalid_argument("config: key '" + key + "' expects true/false, got '" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

ExperimentKind parse_kind(const std::string& text) {
  if (text == "sweep-q") return ExperimentKind::SweepQ;
  if (text == "sweep-r") return ExperimentKind::SweepR;
  if (text == "fidelity-map-q-gcm") return ExperimentKind::FidelityMapQGcm;
  if (text == "fidelity-map-gac-gcm") return ExperimentKind::FidelityMapGacGcm;
  if (text == "timeevo") return ExperimentKind::TimeEvolution;
  if (text == "stability") return ExperimentKind::Stability;
  if (text == "wigner") return ExperimentKind::Wigner;
  throw std::invalid_argument("config: unknown experiment '" + text + "'");
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::SweepQ: return "sweep-q";
    case ExperimentKind::SweepR: return "sweep-r";
    case ExperimentKind::FidelityMapQGcm: return "fidelity-map-q-gcm";
    case ExperimentKind::FidelityMapGacGcm: return "fidelity-map-gac-gcm";
    case ExperimentKind::TimeEvolution: return "timeevo";
    case ExperimentKind::Stability: return "stability";
    case ExperimentKind::Wigner: return "wigner";
  }
  return "unknown";
}

KeyValueMap parse_config_text(const std::string& text) {
  KeyValueMap kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not of the form 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " has an empty key or value");
    }
    if (key.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.") !=
        std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " has an invalid key '" + key + "'");
    }
    if (!kv.emplace(key, value).second) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " repeats key '" + key + "'");
    }
  }
  return kv;
}

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> values;
  if (text.find(',') != std::string::npos) {
    for (const auto& item : split(text, ',')) {
      values.push_back(parse_double(trim(item), "list element"));
    }
    return values;
  }

  bool log_spaced = false;
  std::string body = text;
  if (body.rfind("log:", 0) == 0) {
    log_spaced = true;
    body = body.substr(4);
  }
  const auto parts = split(body, ':');
  if (parts.size() == 1) {
    values.push_back(parse_double(trim(parts[0]), "value"));
    return values;
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("config: range '" + text + "' must be start:stop:count");
  }
  const double start = parse_double(trim(parts[0]), "range start");
  const double stop = parse_double(trim(parts[1]), "range stop");
  const int count = parse_int(trim(parts[2]), "range count");
  if (count < 2) {
    throw std::invalid_argument("config: range '" + text + "' needs count >= 2");
  }
  if (log_spaced && (start <= 0.0 || stop <= 0.0)) {
    throw std::invalid_argument("config: log range '" + text + "' needs positive endpoints");
  }
  for (int k = 0; k < count; ++k) {
    const double frac = static_cast<double>(k) / (count - 1);
    if (log_spaced) {
      values.push_back(std::exp(std::log(start) + frac * (std::log(stop) - std::log(start))));
    } else {
      values.push_back(start + frac * (stop - start));
    }
  }
  return values;
}

ExperimentConfig parse_experiment_config(const KeyValueMap& kv) {
  ExperimentConfig cfg;
  cfg.raw = kv;
  double bath_r = 0.0;
  double bath_theta = std::acos(-1.0);  // pi: the phase that squeezes X
  bool bath_set = false;

  for (const auto& [key, value] : kv) {
    if (key == "experiment") {
      cfg.experiment = parse_kind(value);
    } else if (key == "params.g_ac") {
      cfg.params.g_ac = parse_double(value, key);
    } else if (key == "params.g_cm") {
      cfg.params.g_cm = parse_double(value, key);
    } else if (key == "params.q") {
      cfg.params.q = parse_double(value, key);
    } else if (key == "params.E1") {
      cfg.params.E1 = parse_double(value, key);
    } else if (key == "params.E2") {
      cfg.params.E2 = parse_double(value, key);
    } else if (key == "params.gamma10") {
      cfg.params.gamma10 = parse_double(value, key);
    } else if (key == "params.gamma21") {
      cfg.params.gamma21 = parse_double(value, key);
    } else if (key == "params.kappa_a") {
      cfg.params.kappa_a = parse_double(value, key);
    } else if (key == "params.kappa_b") {
      cfg.params.kappa_b = parse_double(value, key);
    } else if (key == "params.include_K") {
      cfg.params.include_K = parse_bool(value, key);
    } else if (key == "bath.r") {
      bath_r = parse_double(value, key);
      bath_set = true;
    } else if (key == "bath.theta") {
      bath_theta = parse_double(value, key);
      bath_set = true;
    } else if (key == "spec.cavity_dim") {
      cfg.spec.cavity_dim = parse_int(value, key);
    } else if (key == "spec.mech_dim") {
      cfg.spec.mech_dim = parse_int(value, key);
    } else if (key.rfind("sweep.", 0) == 0) {
      const std::string symbol = key.substr(6);
      if (symbol != "q" && symbol != "r" && symbol != "g_cm" && symbol != "g_ac") {
        throw std::invalid_argument("config: unknown sweep symbol '" + symbol + "'");
      }
      cfg.sweeps[symbol] = parse_value_list(value);
    } else if (key == "cutoff.auto") {
      cfg.cutoff_auto = parse_bool(value, key);
    } else if (key == "cutoff.tol") {
      cfg.cutoff_tol = parse_double(value, key);
    } else if (key == "cutoff.cap") {
      cfg.cutoff_cap = parse_int(value, key);
    } else if (key == "solver.method") {
      if (value == "direct") {
        cfg.solver.method = SteadyMethod::DirectLU;
      } else if (value == "krylov") {
        cfg.solver.method = SteadyMethod::IterativeKrylov;
      } else {
        throw std::invalid_argument("config: solver.method must be direct or krylov");
      }
    } else if (key == "solver.residual_tol") {
      cfg.solver.residual_tol = parse_double(value, key);
    } else if (key == "solver.max_iterations") {
      cfg.solver.max_iterations = parse_int(value, key);
    } else if (key == "evolve.t_final") {
      cfg.evolve_t_final = parse_double(value, key);
    } else if (key == "evolve.n_samples") {
      cfg.evolve_n_samples = parse_int(value, key);
    } else if (key == "evolve.rtol") {
      cfg.evolve_rtol = parse_double(value, key);
    } else if (key == "evolve.atol") {
      cfg.evolve_atol = parse_double(value, key);
    } else if (key == "wigner.extent") {
      cfg.wigner_extent = parse_double(value, key);
    } else if (key == "wigner.points") {
      cfg.wigner_points = parse_int(value, key);
    } else if (key == "wigner.mode") {
      if (value == "cavity") {
        cfg.wigner_mode = Subsystem::Cavity;
      } else if (value == "mech") {
        cfg.wigner_mode = Subsystem::Mech;
      } else {
        throw std::invalid_argument("config: wigner.mode must be cavity or mech");
      }
    } else if (key == "output.path") {
      cfg.output_path = value;
    } else if (key == "threads") {
      cfg.threads = parse_int(value, key);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  if (bath_set) {
    cfg.bath = SqueezedBathParams{bath_r, bath_theta};
  }
  // A config without an explicit experiment key is a fragment completed by
  // the caller (the CLI subcommand picks the kind); deferring the cross-field
  // checks avoids demanding sweeps the final kind does not use.
  if (kv.count("experiment")) cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  params.validate();
  spec.validate();
  if (bath) bath->validate();

  for (const auto& [symbol, values] : sweeps) {
    if (values.size() < 2) {
      throw std::invalid_argument("config: sweep." + symbol + " needs at least 2 points");
    }
    for (double v : values) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("config: sweep." + symbol + " has a non-finite point");
      }
    }
  }

  auto require_sweep = [&](const std::string& symbol) {
    if (!sweeps.count(symbol)) {
      throw std::invalid_argument("config: experiment " + to_string(experiment) +
                                  " needs sweep." + symbol);
    }
  };
  switch (experiment) {
    case ExperimentKind::SweepQ:
    case ExperimentKind::Stability:
      require_sweep("q");
      break;
    case ExperimentKind::SweepR:
      require_sweep("r");
      break;
    case ExperimentKind::FidelityMapQGcm:
      require_sweep("q");
      require_sweep("g_cm");
      break;
    case ExperimentKind::FidelityMapGacGcm:
      require_sweep("g_ac");
      require_sweep("g_cm");
      break;
    case ExperimentKind::TimeEvolution:
    case ExperimentKind::Wigner:
      break;
  }

  if (!(cutoff_tol > 0.0)) throw std::invalid_argument("config: cutoff.tol must be positive");
  if (cutoff_cap < 2) throw std::invalid_argument("config: cutoff.cap must be at least 2");
  if (!(solver.residual_tol > 0.0)) {
    throw std::invalid_argument("config: solver.residual_tol must be positive");
  }
  if (solver.max_iterations < 1) {
    throw std::invalid_argument("config: solver.max_iterations must be positive");
  }
  if (!(evolve_t_final > 0.0) || !std::isfinite(evolve_t_final)) {
    throw std::invalid_argument("config: evolve.t_final must be positive and finite");
  }
  if (evolve_n_samples < 1) {
    throw std::invalid_argument("config: evolve.n_samples must be at least 1");
  }
  if (!(evolve_rtol > 0.0) || !(evolve_atol > 0.0)) {
    throw std::invalid_argument("config: evolve tolerances must be positive");
  }
  if (!(wigner_extent > 0.0)) {
    throw std::invalid_argument("config: wigner.extent must be positive");
  }
  if (wigner_points < 2) {
    throw std::invalid_argument("config: wigner.points must be at least 2");
  }
  if (threads < 1) throw std::invalid_argument("config: threads must be at least 1");
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(parse_config_text(buffer.str()));
}

}  // namespace sqz
