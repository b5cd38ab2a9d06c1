// Copyright 2026 The qem-bench Authors
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

#include "qem/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "json.hpp"

#include "qem/errors.hpp"
#include "qem/hamiltonian.hpp"
#include "qem/parallel.hpp"
#include "qem/shot_model.hpp"
#include "qem/trotter.hpp"

namespace qem {

namespace {

// Seed-path component per estimator, fixed by name so that enabling or
// disabling estimators does not shift the seeds of the others.
std::uint64_t estimator_seed_index(const std::string& name) {
  if (name == "raw") return 0;
  if (name == "vd") return 1;
  if (name == "seq_poly") return 2;
  if (name == "seq_exp") return 3;
  if (name == "data_efficient") return 4;
  if (name == "tse") return 5;
  throw InvalidArgument("unknown estimator '" + name + "'");
}

std::vector<PauliString> parse_observable(const ExperimentConfig& cfg) {
  return {PauliString(cfg.observable, 1.0)};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

// Draws one noisy copy of each primitive in fixed order; circuit index ci
// advances with every primitive so the derived sub-seeds are stable.
class TrialSampler {
 public:
  TrialSampler(std::uint64_t master, std::uint64_t estimator,
               std::uint64_t sweep_index, std::uint64_t trial,
               std::int64_t shots_per_circuit)
      : master_(master),
        estimator_(estimator),
        sweep_index_(sweep_index),
        trial_(trial),
        shots_(shots_per_circuit) {}

  double draw(double ideal) {
    ShotRng rng(derive_seed(
        master_, {estimator_, sweep_index_, trial_, circuit_++}));
    return inject_shot_noise(ideal, single_shot_var_pauli(ideal), shots_, rng)
        .sampled;
  }

 private:
  std::uint64_t master_;
  std::uint64_t estimator_;
  std::uint64_t sweep_index_;
  std::uint64_t trial_;
  std::int64_t shots_;
  std::uint64_t circuit_ = 0;
};

// Ideal (infinite-shot) primitives of one estimator plus its assembly rule.
struct EstimatorPipeline {
  std::string name;
  int circuit_count = 0;
  // Assembles the estimate; `draw` maps an ideal primitive value to its
  // (possibly noise-injected) sample.
  std::function<double(const std::function<double(double)>& draw)> assemble;
};

}  // namespace

std::vector<std::pair<double, int>> build_benchmark_grid(
    const ExperimentConfig& cfg, const NodeSet& nodes) {
  std::vector<std::pair<double, int>> grid;
  if (!cfg.grid_p2.empty()) {
    for (std::size_t i = 0; i < cfg.grid_p2.size(); ++i) {
      grid.emplace_back(cfg.grid_p2[i], cfg.grid_m[i]);
    }
    return grid;
  }
  // Node i contributes its own rate column and one neighbour column: the
  // (lambda_{i-1}, lambda_i) pair, except node 0 which pairs with lambda_1.
  const std::size_t count = nodes.lambdas.size();
  const double p2_base = cfg.p2_base();
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::size_t> columns;
    columns.push_back(i);
    if (count > 1) columns.push_back(i == 0 ? 1 : i - 1);
    std::sort(columns.begin(), columns.end());
    for (std::size_t column : columns) {
      const double p2 = nodes.lambdas[column] * p2_base;
      const auto entry = std::make_pair(p2, nodes.trotter_numbers[i]);
      if (std::find(grid.begin(), grid.end(), entry) == grid.end()) {
        grid.push_back(entry);
      }
    }
  }
  return grid;
}

GridSimulation simulate_grid(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  const Hamiltonian h = build_tfim(cfg.n_qubits);
  const DensityMatrix rho0 = DensityMatrix::zero_state(cfg.n_qubits);
  const DensityMatrix exact = exact_evolve(h, cfg.t, rho0);

  const double p_base_global =
      local_to_global_rate(cfg.n_qubits, cfg.p2_base());
  const NodeSet nodes = data_efficient_nodes(cfg.c, cfg.lambdas, p_base_global);
  const auto grid_pairs = build_benchmark_grid(cfg, nodes);

  std::vector<int> distinct_m;
  for (const auto& [p2, m] : grid_pairs) {
    if (std::find(distinct_m.begin(), distinct_m.end(), m) ==
        distinct_m.end()) {
      distinct_m.push_back(m);
    }
  }
  std::vector<TrotterCircuit> circuits(distinct_m.size());
  parallel_for(distinct_m.size(), [&](std::size_t i) {
    circuits[i] = build_trotter_circuit(h, cfg.t, distinct_m[i],
                                        cfg.parsed_layer_order());
  });
  auto circuit_for = [&](int m) -> const TrotterCircuit& {
    const auto it = std::find(distinct_m.begin(), distinct_m.end(), m);
    return circuits[static_cast<std::size_t>(it - distinct_m.begin())];
  };

  const std::vector<PauliString> observable = parse_observable(cfg);
  std::vector<std::optional<DensityMatrix>> states(grid_pairs.size());
  std::vector<double> expectations(grid_pairs.size(), 0.0);
  std::vector<double> distances(grid_pairs.size(), 0.0);
  parallel_for(grid_pairs.size(), [&](std::size_t i) {
    const auto& [p2, m] = grid_pairs[i];
    const NoiseSpec noise = NoiseSpec::local(cfg.p1, p2);
    DensityMatrix state = run_noisy_trotter(circuit_for(m), noise, rho0);
    double value = 0.0;
    for (const PauliString& term : observable) value += expectation(state, term);
    expectations[i] = value;
    distances[i] = trace_distance(state, exact);
    states[i] = std::move(state);
  });

  GridSimulation sim{.config = cfg,
                     .nodes = nodes,
                     .grid = {},
                     .node_state = {},
                     .best_state = 0,
                     .exact_expectation = 0.0,
                     .distances = distances,
                     .observable = observable,
                     .vd = {},
                     .tse = {},
                     .wall_seconds = 0.0};
  for (const PauliString& term : observable) {
    sim.exact_expectation += expectation(exact, term);
  }
  for (std::size_t i = 0; i < grid_pairs.size(); ++i) {
    sim.grid.push_back(GridState{.p2 = grid_pairs[i].first,
                                 .trotter_number = grid_pairs[i].second,
                                 .state = std::move(*states[i]),
                                 .expectation = expectations[i]});
  }

  // Node i's state: (lambda_i * p2_base, M_i).
  for (std::size_t i = 0; i < nodes.lambdas.size(); ++i) {
    const double p2 = nodes.lambdas[i] * cfg.p2_base();
    bool found = false;
    for (std::size_t s = 0; s < sim.grid.size(); ++s) {
      if (sim.grid[s].trotter_number == nodes.trotter_numbers[i] &&
          std::abs(sim.grid[s].p2 - p2) <= 1e-15 + 1e-12 * p2) {
        sim.node_state.push_back(s);
        found = true;
        break;
      }
    }
    if (!found) {
      throw ConfigError(
          "config: the grid override omits the node state (p2 = " +
          std::to_string(p2) + ", M = " +
          std::to_string(nodes.trotter_numbers[i]) + ")");
    }
  }
  sim.best_state = sim.node_state.front();

  sim.vd = compute_vd_primitives(sim.grid[sim.best_state].state, observable);
  std::vector<DensityMatrix> node_states;
  for (std::size_t s : sim.node_state) node_states.push_back(sim.grid[s].state);
  sim.tse = compute_tse_primitives(node_states, observable);

  sim.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return sim;
}

std::vector<StateRow> state_table_from(const GridSimulation& sim) {
  std::vector<StateRow> rows;
  for (std::size_t i = 0; i < sim.grid.size(); ++i) {
    rows.push_back(StateRow{.p2 = sim.grid[i].p2,
                            .trotter_number = sim.grid[i].trotter_number,
                            .trace_distance = sim.distances[i],
                            .expectation = sim.grid[i].expectation});
  }
  std::sort(rows.begin(), rows.end(), [](const StateRow& a, const StateRow& b) {
    if (a.trotter_number != b.trotter_number) {
      return a.trotter_number < b.trotter_number;
    }
    return a.p2 < b.p2;
  });
  return rows;
}

std::vector<StateRow> run_state_table(const ExperimentConfig& cfg) {
  return state_table_from(simulate_grid(cfg));
}

namespace {

std::vector<EstimatorPipeline> build_pipelines(const GridSimulation& sim) {
  const ExperimentConfig& cfg = sim.config;
  const std::size_t n_alpha = sim.observable.size();
  std::vector<double> alpha_coeffs;
  for (const PauliString& term : sim.observable) {
    alpha_coeffs.push_back(term.coefficient());
  }

  // Per grid state and Pauli term: the unit-Pauli expectation.
  std::vector<std::vector<double>> state_alpha(sim.grid.size());
  for (std::size_t s = 0; s < sim.grid.size(); ++s) {
    for (const PauliString& term : sim.observable) {
      state_alpha[s].push_back(
          expectation(sim.grid[s].state, term.with_coefficient(1.0)));
    }
  }

  std::vector<EstimatorPipeline> pipelines;
  for (const std::string& name : cfg.estimators) {
    EstimatorPipeline pipe;
    pipe.name = name;
    if (name == "raw") {
      pipe.circuit_count = static_cast<int>(n_alpha);
      const std::vector<double> ideals = state_alpha[sim.best_state];
      pipe.assemble = [ideals, alpha_coeffs](const auto& draw) {
        double value = 0.0;
        for (std::size_t a = 0; a < ideals.size(); ++a) {
          value += alpha_coeffs[a] * draw(ideals[a]);
        }
        return value;
      };
    } else if (name == "vd") {
      const VdPrimitives prims = sim.vd;
      pipe.circuit_count = prims.circuit_count();
      pipe.assemble = [prims](const auto& draw) {
        VdPrimitives noisy = prims;
        for (double& num : noisy.numerators) num = draw(num);
        noisy.purity = draw(noisy.purity);
        return vd_value_from_primitives(noisy);
      };
    } else if (name == "seq_poly" || name == "seq_exp") {
      pipe.circuit_count = static_cast<int>(sim.grid.size() * n_alpha);
      const PhysicalFit mode =
          name == "seq_poly" ? PhysicalFit::Poly : PhysicalFit::Exp;
      std::vector<GridPoint> skeleton;
      std::vector<std::vector<double>> ideals;
      for (std::size_t s = 0; s < sim.grid.size(); ++s) {
        skeleton.push_back(GridPoint{.rate = sim.grid[s].p2,
                                     .trotter_number =
                                         sim.grid[s].trotter_number,
                                     .value = 0.0,
                                     .variance = 0.0});
        ideals.push_back(state_alpha[s]);
      }
      pipe.assemble = [skeleton, ideals, alpha_coeffs,
                       mode](const auto& draw) {
        std::vector<GridPoint> table = skeleton;
        for (std::size_t s = 0; s < table.size(); ++s) {
          double value = 0.0;
          for (std::size_t a = 0; a < ideals[s].size(); ++a) {
            value += alpha_coeffs[a] * draw(ideals[s][a]);
          }
          table[s].value = value;
        }
        return sequential_physical_then_trotter(table, mode).value;
      };
    } else if (name == "data_efficient") {
      pipe.circuit_count =
          static_cast<int>(sim.node_state.size() * n_alpha);
      const NodeSet nodes = sim.nodes;
      std::vector<std::vector<double>> ideals;
      for (std::size_t s : sim.node_state) ideals.push_back(state_alpha[s]);
      pipe.assemble = [nodes, ideals, alpha_coeffs](const auto& draw) {
        std::vector<double> values;
        for (const std::vector<double>& node_ideals : ideals) {
          double value = 0.0;
          for (std::size_t a = 0; a < node_ideals.size(); ++a) {
            value += alpha_coeffs[a] * draw(node_ideals[a]);
          }
          values.push_back(value);
        }
        return data_efficient_estimate(nodes, values).value;
      };
    } else if (name == "tse") {
      const TsePrimitives prims = sim.tse;
      const std::vector<double> g = sim.nodes.coefficients;
      pipe.circuit_count = prims.circuit_count();
      pipe.assemble = [prims, g](const auto& draw) {
        TsePrimitives noisy = prims;
        for (auto& per_alpha : noisy.diag) {
          for (double& v : per_alpha) v = draw(v);
        }
        for (auto& per_alpha : noisy.cross) {
          for (double& v : per_alpha) v = draw(v);
        }
        // One overlap circuit per ordered pair, matching the independence
        // assumed by the estimator's variance formula.
        for (int i = 0; i < noisy.node_count(); ++i) {
          for (int j = 0; j < noisy.node_count(); ++j) {
            auto& entry = noisy.overlaps[static_cast<std::size_t>(i)]
                                        [static_cast<std::size_t>(j)];
            entry = draw(entry);
          }
        }
        return tse_value_from_primitives(noisy, g);
      };
    } else {
      throw InvalidArgument("unknown estimator '" + name + "'");
    }
    pipelines.push_back(std::move(pipe));
  }
  return pipelines;
}

}  // namespace

MseSweepResult mse_sweep_from(const GridSimulation& sim) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentConfig& cfg = sim.config;
  MseSweepResult result;
  result.exact_expectation = sim.exact_expectation;

  const std::vector<EstimatorPipeline> pipelines = build_pipelines(sim);
  const auto identity_draw = [](double v) { return v; };
  for (const EstimatorPipeline& pipe : pipelines) {
    result.bias_sq[pipe.name] = [&] {
      const double ideal = pipe.assemble(identity_draw);
      const double bias = sim.exact_expectation - ideal;
      return bias * bias;
    }();
    result.circuit_counts[pipe.name] = pipe.circuit_count;
  }

  for (const EstimatorPipeline& pipe : pipelines) {
    const std::uint64_t est_index = estimator_seed_index(pipe.name);
    for (std::size_t n_idx = 0; n_idx < cfg.n_sweep.size(); ++n_idx) {
      const std::int64_t total = cfg.n_sweep[n_idx];
      BenchRow row;
      row.estimator = pipe.name;
      row.shots = total;
      row.bias_sq = result.bias_sq[pipe.name];

      std::int64_t per_circuit = 0;
      bool allocatable = true;
      try {
        per_circuit = allocate_shots(total, pipe.circuit_count).per_circuit;
      } catch (const InsufficientShots&) {
        allocatable = false;
      }

      std::vector<double> squared_errors;
      squared_errors.reserve(static_cast<std::size_t>(cfg.trials));
      for (int trial = 0; trial < cfg.trials; ++trial) {
        if (!allocatable) {
          ++row.n_failures;
          continue;
        }
        TrialSampler sampler(cfg.master_seed, est_index,
                             static_cast<std::uint64_t>(n_idx),
                             static_cast<std::uint64_t>(trial), per_circuit);
        try {
          const double estimate =
              pipe.assemble([&](double v) { return sampler.draw(v); });
          const double err = sim.exact_expectation - estimate;
          squared_errors.push_back(err * err);
        } catch (const Error&) {
          ++row.n_failures;
        }
      }

      if (squared_errors.empty()) {
        row.mse_mean = std::numeric_limits<double>::quiet_NaN();
        row.mse_stderr = std::numeric_limits<double>::quiet_NaN();
      } else {
        double mean = 0.0;
        for (double e : squared_errors) mean += e;
        mean /= static_cast<double>(squared_errors.size());
        row.mse_mean = mean;
        if (squared_errors.size() > 1) {
          double ss = 0.0;
          for (double e : squared_errors) ss += (e - mean) * (e - mean);
          const double var =
              ss / static_cast<double>(squared_errors.size() - 1);
          row.mse_stderr =
              std::sqrt(var / static_cast<double>(squared_errors.size()));
        }
      }
      result.rows.push_back(std::move(row));
    }
  }

  result.wall_seconds =
      sim.wall_seconds +
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

MseSweepResult run_mse_sweep(const ExperimentConfig& cfg) {
  return mse_sweep_from(simulate_grid(cfg));
}

void write_states_csv(const std::string& path,
                      const std::vector<StateRow>& rows) {
  std::ofstream out = open_output(path);
  out << "p2,M,trace_distance,expectation\n";
  for (const StateRow& row : rows) {
    out << format_double(row.p2) << ',' << row.trotter_number << ','
        << format_double(row.trace_distance) << ','
        << format_double(row.expectation) << '\n';
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

void write_mse_csv(const std::string& path, const std::vector<BenchRow>& rows) {
  std::ofstream out = open_output(path);
  out << "estimator,N,mse_mean,mse_stderr,bias_sq,n_failures\n";
  for (const BenchRow& row : rows) {
    out << row.estimator << ',' << row.shots << ','
        << format_double(row.mse_mean) << ',' << format_double(row.mse_stderr)
        << ',' << format_double(row.bias_sq) << ',' << row.n_failures << '\n';
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

void write_summary_json(const std::string& path, const ExperimentConfig& cfg,
                        const MseSweepResult& result) {
  nlohmann::json j;
  j["config"] = nlohmann::json::parse(config_to_json(cfg));
  j["master_seed"] = cfg.master_seed;
  j["exact_expectation"] = result.exact_expectation;
  j["wall_seconds"] = result.wall_seconds;
  nlohmann::json bias;
  for (const auto& [name, value] : result.bias_sq) bias[name] = value;
  j["bias_sq"] = bias;
  nlohmann::json circuits;
  for (const auto& [name, value] : result.circuit_counts) {
    circuits[name] = value;
  }
  j["circuit_counts"] = circuits;
  if (result.bias_sq.count("data_efficient")) {
    const double de = result.bias_sq.at("data_efficient");
    nlohmann::json ratios;
    for (const char* other : {"raw", "vd", "seq_poly", "seq_exp", "tse"}) {
      if (result.bias_sq.count(other) && de > 0.0) {
        ratios[std::string("bias_sq_") + other + "_over_data_efficient"] =
            result.bias_sq.at(other) / de;
      }
    }
    j["converged_ratios"] = ratios;
  }
  std::ofstream out = open_output(path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

void emit_reports(const std::string& out_dir, const ExperimentConfig& cfg,
                  const std::vector<StateRow>& states,
                  const MseSweepResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + out_dir +
                  "': " + ec.message());
  }
  const std::filesystem::path dir(out_dir);
  write_states_csv((dir / "states.csv").string(), states);
  write_mse_csv((dir / "mse.csv").string(), result.rows);
  write_summary_json((dir / "summary.json").string(), cfg, result);
}

}  // namespace qem
