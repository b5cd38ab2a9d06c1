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

#ifndef QEM_CONFIG_HPP_
#define QEM_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qem/trotter.hpp"

namespace qem {

// Benchmark configuration. Defaults are the full 10-qubit profile; the smoke
// profile is a 6-qubit variant sized for CI.
struct ExperimentConfig {
  int n_qubits = 10;
  double t = 1.0;
  double p1 = 1.0e-5;
  std::vector<double> p2_list = {1.0e-4, 2.0e-4, 3.0e-4};
  double c = 1.0;
  std::vector<double> lambdas = {1.0, 2.0, 3.0};
  std::string observable = "XIIIIIIIII";
  std::vector<std::int64_t> n_sweep = {1000000LL,       10000000LL,
                                       100000000LL,     1000000000LL,
                                       10000000000LL,   100000000000LL,
                                       1000000000000LL};
  int trials = 100;
  std::uint64_t master_seed = 1;
  std::vector<std::string> estimators = {"raw",     "vd",
                                         "seq_poly", "seq_exp",
                                         "data_efficient", "tse"};
  std::string layer_order = "x_then_zz";

  // Optional explicit (p2, M) grid override; paired arrays. Empty = the
  // default grid derived from the node rule.
  std::vector<double> grid_p2;
  std::vector<int> grid_m;

  static ExperimentConfig paper_default();
  static ExperimentConfig smoke_profile();

  LayerOrder parsed_layer_order() const;
  double p2_base() const { return p2_list.at(0); }

  // Throws ConfigError on any violated invariant.
  void validate() const;
};

// Parses a flat key = value document (numbers, strings, [arrays]; '#'
// comments). Unknown keys, type errors and malformed lines raise ConfigError
// with "path:line:" context. Missing keys keep their defaults.
ExperimentConfig load_config(const std::string& path);

// The effective config echo written into summary.json.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace qem

#endif  // QEM_CONFIG_HPP_
