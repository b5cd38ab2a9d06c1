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

#ifndef QEM_BENCH_HPP_
#define QEM_BENCH_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qem/config.hpp"
#include "qem/density_matrix.hpp"
#include "qem/extrapolation.hpp"
#include "qem/purification.hpp"

namespace qem {

struct StateRow {
  double p2 = 0.0;
  int trotter_number = 0;
  double trace_distance = 0.0;
  double expectation = 0.0;
};

struct BenchRow {
  std::string estimator;
  std::int64_t shots = 0;
  double mse_mean = 0.0;
  double mse_stderr = 0.0;
  double bias_sq = 0.0;
  int n_failures = 0;
};

// One simulated (p2, M) state of the benchmark grid.
struct GridState {
  double p2 = 0.0;
  int trotter_number = 0;
  DensityMatrix state;
  double expectation = 0.0;  // infinite-shot observable value
};

// Everything the table and the sweep share: the exact state, the grid
// states, the node set and the purification primitives.
struct GridSimulation {
  ExperimentConfig config;
  NodeSet nodes;
  std::vector<GridState> grid;          // all simulated (p2, M) states
  std::vector<std::size_t> node_state;  // node i -> index into grid
  std::size_t best_state = 0;           // grid index used by raw and VD
  double exact_expectation = 0.0;
  std::vector<double> distances;        // per grid state, to the exact state
  std::vector<PauliString> observable;  // single-term decomposition
  VdPrimitives vd;                      // at the best state
  TsePrimitives tse;                    // over the node states
  double wall_seconds = 0.0;
};

// Default grid from the node rule: node i contributes (lambda_i p2_base, M_i)
// plus a second rate column per the documented pairing; 2(n'+1) states.
std::vector<std::pair<double, int>> build_benchmark_grid(
    const ExperimentConfig& cfg, const NodeSet& nodes);

GridSimulation simulate_grid(const ExperimentConfig& cfg);

std::vector<StateRow> state_table_from(const GridSimulation& sim);
std::vector<StateRow> run_state_table(const ExperimentConfig& cfg);

struct MseSweepResult {
  std::vector<BenchRow> rows;
  std::map<std::string, double> bias_sq;         // per estimator
  std::map<std::string, int> circuit_counts;     // per estimator
  double exact_expectation = 0.0;
  double wall_seconds = 0.0;
};

MseSweepResult mse_sweep_from(const GridSimulation& sim);
MseSweepResult run_mse_sweep(const ExperimentConfig& cfg);

// states.csv / mse.csv / summary.json, '\n' line endings, full-precision
// decimal floats. Throws IoError with path context.
void write_states_csv(const std::string& path, const std::vector<StateRow>& rows);
void write_mse_csv(const std::string& path, const std::vector<BenchRow>& rows);
void write_summary_json(const std::string& path, const ExperimentConfig& cfg,
                        const MseSweepResult& result);
void emit_reports(const std::string& out_dir, const ExperimentConfig& cfg,
                  const std::vector<StateRow>& states,
                  const MseSweepResult& result);

}  // namespace qem

#endif  // QEM_BENCH_HPP_
