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

#include "sqz/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sqz/errors.hpp"
#include "sqz/liouvillian.hpp"
#include "sqz/model.hpp"
#include "sqz/observables.hpp"
#include "sqz/semiclassical.hpp"

namespace sqz {

namespace {

constexpr double k_nan = std::numeric_limits<double>::quiet_NaN();

std::string dims_string(const HilbertSpec& spec) {
  return std::to_string(spec.cavity_dim) + "x" + std::to_string(spec.mech_dim);
}

std::string trail_to_string(const std::vector<CutoffStep>& trail) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trail.size(); ++i) {
    if (i > 0) out << " | ";
    out << dims_string(trail[i].spec) << " obs=[";
    for (std::size_t k = 0; k < trail[i].observables.size(); ++k) {
      if (k > 0) out << ", ";
      out << format_number(trail[i].observables[k]);
    }
    out << "]";
    if (i > 0) out << " delta=" << format_number(trail[i].max_delta);
  }
  return out.str();
}

// Work-stealing loop over [0, n). Rows write to disjoint slots, so the only
// shared state is the index counter and the first captured exception.
void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  threads = std::clamp(threads, 1, std::max(1, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto drain = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::pair<double, double> mode_variances(const DenseMat& rho, const HilbertSpec& spec,
                                         Quadrature quad) {
  const double va = quadrature_variance(partial_trace(rho, Subsystem::Cavity, spec), quad);
  const double vb = quadrature_variance(partial_trace(rho, Subsystem::Mech, spec), quad);
  return {va, vb};
}

CutoffTarget variance_target(const SystemParams& params,
                             const std::optional<SqueezedBathParams>& bath, Quadrature quad,
                             const SteadyStateOptions& solver) {
  return [=](const HilbertSpec& hs) {
    const SteadyPoint pt = solve_steady(params, bath, hs, solver);
    const auto [va, vb] = mode_variances(pt.rho, hs, quad);
    return std::vector<double>{va, vb};
  };
}

CutoffTarget fidelity_target(const SystemParams& params,
                             const std::optional<SqueezedBathParams>& bath,
                             const SteadyStateOptions& solver) {
  return [=](const HilbertSpec& hs) {
    const SteadyPoint pt = solve_steady(params, bath, hs, solver);
    const double f = fidelity(partial_trace(pt.rho, Subsystem::Cavity, hs),
                              partial_trace(pt.rho, Subsystem::Mech, hs));
    return std::vector<double>{f};
  };
}

std::string make_sidecar(const ExperimentConfig& cfg, const Table& table, double wall_seconds,
                         const std::vector<std::string>& trails, int n_unstable,
                         int n_unconverged) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["experiment"] = to_string(cfg.experiment);
  j["config"] = cfg.raw;
  j["columns"] = table.columns;
  j["n_rows"] = table.rows.size();
  j["wall_time_seconds"] = wall_seconds;
  j["solver_method"] = cfg.solver.method == SteadyMethod::DirectLU ? "direct" : "krylov";
  j["residual_tol"] = cfg.solver.residual_tol;
  j["cutoff_auto"] = cfg.cutoff_auto;
  j["cutoff_trails"] = trails;
  j["flagged_unstable"] = n_unstable;
  j["flagged_unconverged"] = n_unconverged;
  return j.dump(2) + "\n";
}

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared per-grid-point outcome for the sweep and map runners.
struct PointOutcome {
  bool stable = true;
  bool converged = true;
  double residual = k_nan;
  std::vector<double> values;  // experiment-specific numeric observables
  std::string cutoff = "";
  std::string trail = "";
};

std::string flag(bool b) { return b ? "1" : "0"; }

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("Table: row has " + std::to_string(row.size()) +
                                " cells, expected " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out << ',';
    out << columns[c];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string CutoffResult::trail_string() const { return trail_to_string(trail); }

CutoffResult converge_cutoff(const CutoffTarget& target, double cutoff_tol, int cap,
                             int start_dim) {
  if (!(cutoff_tol > 0.0)) {
    throw std::invalid_argument("converge_cutoff: cutoff_tol must be positive");
  }
  if (start_dim < 2) {
    throw std::invalid_argument("converge_cutoff: start_dim must be at least 2");
  }

  std::vector<CutoffStep> trail;
  HilbertSpec current;
  current.cavity_dim = start_dim;
  current.mech_dim = start_dim;
  trail.push_back({current, target(current), 0.0});

  while (true) {
    HilbertSpec next = current;
    next.cavity_dim += 2;
    next.mech_dim += 2;
    if (next.cavity_dim > cap || next.mech_dim > cap) {
      throw UnconvergedCutoffError(
          "converge_cutoff: cap " + std::to_string(cap) +
              " reached before the observables settled; trail: " + trail_to_string(trail),
          trail_to_string(trail));
    }
    const std::vector<double> obs = target(next);
    const std::vector<double>& prev = trail.back().observables;
    if (obs.size() != prev.size()) {
      throw std::logic_error("converge_cutoff: target changed its observable count");
    }
    double delta = 0.0;
    for (std::size_t k = 0; k < obs.size(); ++k) {
      delta = std::max(delta, std::abs(obs[k] - prev[k]));
    }
    trail.push_back({next, obs, delta});
    if (delta < cutoff_tol) {
      return {current, std::move(trail)};
    }
    current = next;
  }
}

CutoffResult converge_cutoff(const ExperimentConfig& config) {
  config.validate();
  CutoffTarget target;
  switch (config.experiment) {
    case ExperimentKind::SweepQ:
      target = variance_target(config.params, std::nullopt, Quadrature::Y, config.solver);
      break;
    case ExperimentKind::SweepR: {
      SqueezedBathParams bath = config.bath.value_or(SqueezedBathParams{0.3, std::acos(-1.0)});
      target = variance_target(config.params, bath, Quadrature::X, config.solver);
      break;
    }
    case ExperimentKind::TimeEvolution:
      target = variance_target(config.params, config.bath,
                               config.bath ? Quadrature::X : Quadrature::Y, config.solver);
      break;
    case ExperimentKind::FidelityMapQGcm:
      target = fidelity_target(config.params, std::nullopt, config.solver);
      break;
    case ExperimentKind::FidelityMapGacGcm:
      target = fidelity_target(config.params, config.bath, config.solver);
      break;
    case ExperimentKind::Wigner: {
      const Subsystem mode = config.wigner_mode;
      const SystemParams params = config.params;
      const auto bath = config.bath;
      const SteadyStateOptions solver = config.solver;
      target = [=](const HilbertSpec& hs) {
        const SteadyPoint pt = solve_steady(params, bath, hs, solver);
        const DenseMat reduced = partial_trace(pt.rho, mode, hs);
        return std::vector<double>{quadrature_variance(reduced, Quadrature::X),
                                   quadrature_variance(reduced, Quadrature::Y)};
      };
      break;
    }
    case ExperimentKind::Stability:
      throw std::invalid_argument("converge_cutoff: the stability experiment has no Hilbert cutoff");
  }
  return converge_cutoff(target, config.cutoff_tol, config.cutoff_cap);
}

SteadyPoint solve_steady(const SystemParams& params,
                         const std::optional<SqueezedBathParams>& bath, const HilbertSpec& spec,
                         const SteadyStateOptions& solver) {
  params.validate();
  spec.validate();
  SparseMat H;
  std::vector<DissipationChannel> channels;
  if (bath) {
    bath->validate();
    H = build_H3(params, spec) + build_HE(params, spec);
    channels = squeezed_channels(params, *bath, spec);
  } else {
    H = build_H2(params, spec) + build_HE(params, spec);
    channels = standard_channels(params, spec);
  }
  const Liouvillian L = build_liouvillian(H, channels);
  SteadyPoint pt;
  pt.rho = steady_state(L, solver);
  pt.residual = (L.matrix * vec(pt.rho)).cwiseAbs().maxCoeff();
  return pt;
}

namespace {

// Evaluate one sweep/map grid point: stability gate, optional cutoff ladder,
// steady solve, observable extraction via `extract`.
PointOutcome evaluate_point(
    const ExperimentConfig& cfg, const SystemParams& params,
    const std::optional<SqueezedBathParams>& bath, bool gate_on_stability,
    const CutoffTarget& ladder_target,
    const std::function<std::vector<double>(const DenseMat&, const HilbertSpec&)>& extract) {
  PointOutcome out;
  if (gate_on_stability) {
    const StabilityResult stab = stability(SemiclassicalParams::from(params));
    if (!stab.is_stable) {
      out.stable = false;
      return out;
    }
  }
  try {
    HilbertSpec used = cfg.spec;
    if (cfg.cutoff_auto) {
      const CutoffResult ladder = converge_cutoff(ladder_target, cfg.cutoff_tol, cfg.cutoff_cap);
      used = ladder.converged;
      out.trail = ladder.trail_string();
    }
    const SteadyPoint pt = solve_steady(params, bath, used, cfg.solver);
    out.values = extract(pt.rho, used);
    out.residual = pt.residual;
    out.cutoff = dims_string(used);
  } catch (const UnconvergedCutoffError& e) {
    out.converged = false;
    out.trail = e.trail;
  } catch (const SolverError&) {
    out.converged = false;
  }
  return out;
}

}  // namespace

RunResult run_sweep_q(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::SweepQ) {
    throw std::invalid_argument("run_sweep_q: config.experiment mismatch");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double>& qs = cfg.sweeps.at("q");
  const std::vector<double> gcms =
      cfg.sweeps.count("g_cm") ? cfg.sweeps.at("g_cm") : std::vector<double>{cfg.params.g_cm};

  const int n = static_cast<int>(qs.size() * gcms.size());
  std::vector<PointOutcome> outcomes(n);
  parallel_for(n, cfg.threads, [&](int i) {
    const double g_cm = gcms[i / qs.size()];
    const double q = qs[i % qs.size()];
    SystemParams p = cfg.params;
    p.g_cm = g_cm;
    p.q = q;
    outcomes[i] = evaluate_point(
        cfg, p, std::nullopt, /*gate_on_stability=*/true,
        variance_target(p, std::nullopt, Quadrature::Y, cfg.solver),
        [](const DenseMat& rho, const HilbertSpec& hs) {
          const auto [va, vb] = mode_variances(rho, hs, Quadrature::Y);
          return std::vector<double>{va, vb};
        });
  });

  Table table;
  table.columns = {"q",          "g_cm",       "var_ya_num", "var_yb_num", "var_ya_ana",
                   "var_yb_ana", "residual",   "cutoff_used", "stable",    "converged"};
  std::vector<std::string> trails;
  int n_unstable = 0, n_unconverged = 0;
  for (int i = 0; i < n; ++i) {
    const double g_cm = gcms[i / qs.size()];
    const double q = qs[i % qs.size()];
    SystemParams p = cfg.params;
    p.g_cm = g_cm;
    p.q = q;
    const CoherentVariances ana = analytic_variance_coherent(SemiclassicalParams::from(p));
    const PointOutcome& o = outcomes[i];
    const bool have = o.stable && o.converged;
    if (!o.stable) ++n_unstable;
    if (!o.converged) ++n_unconverged;
    if (!o.trail.empty()) trails.push_back(o.trail);
    table.add_row({format_number(q), format_number(g_cm),
                   format_number(have ? o.values[0] : k_nan),
                   format_number(have ? o.values[1] : k_nan), format_number(ana.var_ya),
                   format_number(ana.var_yb), format_number(o.residual),
                   o.cutoff.empty() ? "none" : o.cutoff, flag(o.stable), flag(o.converged)});
  }

  RunResult result;
  result.table = std::move(table);
  result.wall_seconds = elapsed_since(t0);
  result.sidecar_json =
      make_sidecar(cfg, result.table, result.wall_seconds, trails, n_unstable, n_unconverged);
  return result;
}

RunResult run_sweep_r(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::SweepR) {
    throw std::invalid_argument("run_sweep_r: config.experiment mismatch");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double>& rs = cfg.sweeps.at("r");
  const double theta = cfg.bath ? cfg.bath->theta : std::acos(-1.0);

  const int n = static_cast<int>(rs.size());
  std::vector<PointOutcome> outcomes(n);
  parallel_for(n, cfg.threads, [&](int i) {
    const SqueezedBathParams bath{rs[i], theta};
    // No mechanical pump in the reservoir setup, so no stability gate.
    outcomes[i] = evaluate_point(
        cfg, cfg.params, bath, /*gate_on_stability=*/false,
        variance_target(cfg.params, bath, Quadrature::X, cfg.solver),
        [](const DenseMat& rho, const HilbertSpec& hs) {
          const auto [va, vb] = mode_variances(rho, hs, Quadrature::X);
          return std::vector<double>{va, vb};
        });
  });

  Table table;
  table.columns = {"r",          "var_xa_num", "var_xb_num", "var_xa_ana", "var_xb_ana",
                   "residual",   "cutoff_used", "stable",     "converged"};
  std::vector<std::string> trails;
  int n_unconverged = 0;
  SemiclassicalParams sc = SemiclassicalParams::from(cfg.params);
  sc.q = 0.0;
  for (int i = 0; i < n; ++i) {
    const SqueezedBathParams bath{rs[i], theta};
    const BathVariances ana = analytic_variance_bath(sc, bath);
    const PointOutcome& o = outcomes[i];
    const bool have = o.converged;
    if (!o.converged) ++n_unconverged;
    if (!o.trail.empty()) trails.push_back(o.trail);
    table.add_row({format_number(rs[i]), format_number(have ? o.values[0] : k_nan),
                   format_number(have ? o.values[1] : k_nan), format_number(ana.var_xa),
                   format_number(ana.var_xb), format_number(o.residual),
                   o.cutoff.empty() ? "none" : o.cutoff, flag(o.stable), flag(o.converged)});
  }

  RunResult result;
  result.table = std::move(table);
  result.wall_seconds = elapsed_since(t0);
  result.sidecar_json =
      make_sidecar(cfg, result.table, result.wall_seconds, trails, 0, n_unconverged);
  return result;
}

RunResult run_fidelity_maps(const ExperimentConfig& cfg) {
  cfg.validate();
  const bool q_map = cfg.experiment == ExperimentKind::FidelityMapQGcm;
  if (!q_map && cfg.experiment != ExperimentKind::FidelityMapGacGcm) {
    throw std::invalid_argument("run_fidelity_maps: config.experiment mismatch");
  }
  if (q_map && cfg.bath) {
    throw std::invalid_argument(
        "run_fidelity_maps: the q/g_cm map uses the coherent pump; remove bath.*");
  }
  if (cfg.spec.cavity_dim != cfg.spec.mech_dim) {
    throw std::invalid_argument(
        "run_fidelity_maps: fidelity between the reduced modes needs cavity_dim == mech_dim");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double>& outer = q_map ? cfg.sweeps.at("q") : cfg.sweeps.at("g_ac");
  const std::vector<double>& inner = cfg.sweeps.at("g_cm");

  const int n = static_cast<int>(outer.size() * inner.size());
  std::vector<PointOutcome> outcomes(n);
  parallel_for(n, cfg.threads, [&](int i) {
    SystemParams p = cfg.params;
    const double first = outer[i / inner.size()];
    if (q_map) {
      p.q = first;
    } else {
      p.g_ac = first;
    }
    p.g_cm = inner[i % inner.size()];
    const bool gate = !cfg.bath.has_value();  // pump model only
    outcomes[i] = evaluate_point(cfg, p, cfg.bath, gate,
                                 fidelity_target(p, cfg.bath, cfg.solver),
                                 [](const DenseMat& rho, const HilbertSpec& hs) {
                                   return std::vector<double>{
                                       fidelity(partial_trace(rho, Subsystem::Cavity, hs),
                                                partial_trace(rho, Subsystem::Mech, hs))};
                                 });
  });

  Table table;
  table.columns = {q_map ? "q" : "g_ac", "g_cm",   "fidelity", "residual",
                   "cutoff_used",        "stable", "converged"};
  std::vector<std::string> trails;
  int n_unstable = 0, n_unconverged = 0;
  for (int i = 0; i < n; ++i) {
    const PointOutcome& o = outcomes[i];
    const bool have = o.stable && o.converged;
    if (!o.stable) ++n_unstable;
    if (!o.converged) ++n_unconverged;
    if (!o.trail.empty()) trails.push_back(o.trail);
    table.add_row({format_number(outer[i / inner.size()]),
                   format_number(inner[i % inner.size()]),
                   format_number(have ? o.values[0] : k_nan), format_number(o.residual),
                   o.cutoff.empty() ? "none" : o.cutoff, flag(o.stable), flag(o.converged)});
  }

  RunResult result;
  result.table = std::move(table);
  result.wall_seconds = elapsed_since(t0);
  result.sidecar_json =
      make_sidecar(cfg, result.table, result.wall_seconds, trails, n_unstable, n_unconverged);
  return result;
}

RunResult run_time_evolution(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::TimeEvolution) {
    throw std::invalid_argument("run_time_evolution: config.experiment mismatch");
  }
  const auto t0 = std::chrono::steady_clock::now();

  SparseMat H;
  std::vector<DissipationChannel> channels;
  if (cfg.bath) {
    H = build_H3(cfg.params, cfg.spec) + build_HE(cfg.params, cfg.spec);
    channels = squeezed_channels(cfg.params, *cfg.bath, cfg.spec);
  } else {
    H = build_H2(cfg.params, cfg.spec) + build_HE(cfg.params, cfg.spec);
    channels = standard_channels(cfg.params, cfg.spec);
  }
  const Liouvillian L = build_liouvillian(H, channels);

  EvolveOptions opts;
  opts.rtol = cfg.evolve_rtol;
  opts.atol = cfg.evolve_atol;
  opts.t_final = cfg.evolve_t_final;
  opts.n_samples = cfg.evolve_n_samples;
  opts.initial_state = ground_vacuum_state(cfg.spec);
  const std::vector<EvolveSample> samples = evolve(L, opts);

  Table table;
  table.columns = {"t", "var_xa", "var_ya", "var_xb", "var_yb", "trace_defect"};
  for (const EvolveSample& s : samples) {
    const DenseMat rho_a = partial_trace(s.rho, Subsystem::Cavity, cfg.spec);
    const DenseMat rho_b = partial_trace(s.rho, Subsystem::Mech, cfg.spec);
    table.add_row({format_number(s.t), format_number(quadrature_variance(rho_a, Quadrature::X)),
                   format_number(quadrature_variance(rho_a, Quadrature::Y)),
                   format_number(quadrature_variance(rho_b, Quadrature::X)),
                   format_number(quadrature_variance(rho_b, Quadrature::Y)),
                   format_number(std::abs(s.rho.trace() - cplx(1.0, 0.0)))});
  }

  RunResult result;
  result.table = std::move(table);
  result.wall_seconds = elapsed_since(t0);
  result.sidecar_json = make_sidecar(cfg, result.table, result.wall_seconds, {}, 0, 0);
  return result;
}

RunResult run_stability(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::Stability) {
    throw std::invalid_argument("run_stability: config.experiment mismatch");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double>& qs = cfg.sweeps.at("q");

  SemiclassicalParams base = SemiclassicalParams::from(cfg.params);
  const double q_hi = base.kappa_a + base.kappa_b;  // far above any threshold
  const double threshold = bisect_stability_threshold(base, 0.0, q_hi);

  Table table;
  table.columns = {"q", "max_re", "is_stable", "closed_stable", "threshold"};
  for (int k = 0; k < 10; ++k) {
    table.columns.push_back("eig" + std::to_string(k) + "_re");
    table.columns.push_back("eig" + std::to_string(k) + "_im");
  }
  for (double q : qs) {
    SemiclassicalParams p = base;
    p.q = q;
    StabilityResult res = stability(p);
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end(), [](const cplx& u, const cplx& v) {
      if (u.real() != v.real()) return u.real() > v.real();
      return u.imag() < v.imag();
    });
    std::vector<std::string> row = {format_number(q), format_number(res.max_real),
                                    flag(res.is_stable), flag(res.closed_criterion_stable),
                                    format_number(threshold)};
    for (const cplx& ev : res.eigenvalues) {
      row.push_back(format_number(ev.real()));
      row.push_back(format_number(ev.imag()));
    }
    table.add_row(std::move(row));
  }

  RunResult result;
  result.table = std::move(table);
  result.wall_seconds = elapsed_since(t0);
  result.sidecar_json = make_sidecar(cfg, result.table, result.wall_seconds, {}, 0, 0);
  return result;
}

RunResult run_wigner(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::Wigner) {
    throw std::invalid_argument("run_wigner: config.experiment mismatch");
  }
  const auto t0 = std::chrono::steady_clock::now();

  const SteadyPoint pt = solve_steady(cfg.params, cfg.bath, cfg.spec, cfg.solver);
  const DenseMat reduced = partial_trace(pt.rho, cfg.wigner_mode, cfg.spec);

  std::vector<double> axis(cfg.wigner_points);
  for (int k = 0; k < cfg.wigner_points; ++k) {
    axis[k] = -cfg.wigner_extent +
              2.0 * cfg.wigner_extent * k / static_cast<double>(cfg.wigner_points - 1);
  }
  std::vector<cplx> points;
  points.reserve(axis.size() * axis.size());
  for (double x : axis) {
    for (double p : axis) {
      points.emplace_back(x, p);
    }
  }
  const std::vector<double> w = wigner(reduced, points);

  Table table;
  table.columns = {"x", "p", "w"};
  std::size_t idx = 0;
  for (double x : axis) {
    for (double p : axis) {
      table.add_row({format_number(x), format_number(p), format_number(w[idx++])});
    }
  }

  RunResult result;
  result.table = std::move(table);
  result.wall_seconds = elapsed_since(t0);
  result.sidecar_json = make_sidecar(cfg, result.table, result.wall_seconds, {}, 0, 0);
  return result;
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentKind::SweepQ:
      return run_sweep_q(cfg);
    case ExperimentKind::SweepR:
      return run_sweep_r(cfg);
    case ExperimentKind::FidelityMapQGcm:
    case ExperimentKind::FidelityMapGacGcm:
      return run_fidelity_maps(cfg);
    case ExperimentKind::TimeEvolution:
      return run_time_evolution(cfg);
    case ExperimentKind::Stability:
      return run_stability(cfg);
    case ExperimentKind::Wigner:
      return run_wigner(cfg);
  }
  throw std::logic_error("run_experiment: unhandled experiment kind");
}

}  // namespace sqz
