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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qem/bench.hpp"
#include "qem/config.hpp"
#include "qem/errors.hpp"

namespace {

qem::ExperimentConfig apply_profile(const qem::ExperimentConfig& loaded,
                                    const std::string& profile) {
  if (profile == "full") return loaded;
  // Smoke: the built-in 6-qubit profile, keeping the run controls of the
  // loaded config.
  qem::ExperimentConfig cfg = qem::ExperimentConfig::smoke_profile();
  cfg.master_seed = loaded.master_seed;
  cfg.estimators = loaded.estimators;
  cfg.layer_order = loaded.layer_order;
  return cfg;
}

int run_states(const std::string& config_path, const std::string& out_dir) {
  const qem::ExperimentConfig cfg = qem::load_config(config_path);
  const auto rows = qem::run_state_table(cfg);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw qem::IoError("cannot create output directory '" + out_dir + "'");
  }
  const std::string path = out_dir + "/states.csv";
  qem::write_states_csv(path, rows);
  std::cout << "wrote " << path << " (" << rows.size() << " states)\n";
  return 0;
}

int run_mse(const std::string& config_path, const std::string& out_dir,
            std::uint64_t seed, bool seed_set, int trials,
            const std::string& profile) {
  qem::ExperimentConfig cfg =
      apply_profile(qem::load_config(config_path), profile);
  if (seed_set) cfg.master_seed = seed;
  if (trials > 0) cfg.trials = trials;
  cfg.validate();

  const qem::GridSimulation sim = qem::simulate_grid(cfg);
  const auto states = qem::state_table_from(sim);
  const qem::MseSweepResult result = qem::mse_sweep_from(sim);
  qem::emit_reports(out_dir, cfg, states, result);
  std::cout << "wrote " << out_dir << "/{states.csv,mse.csv,summary.json} in "
            << result.wall_seconds << " s\n";
  return 0;
}

int run_validate(const std::string& config_path) {
  const qem::ExperimentConfig cfg = qem::load_config(config_path);
  std::cout << "OK\n" << qem::config_to_json(cfg) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy-Trotter density-matrix benchmark suite"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string profile = "full";

  CLI::App* states = app.add_subcommand("states", "simulate the (p2, M) grid");
  states->add_option("--config", config_path, "config file")->required();
  states->add_option("--out", out_dir, "output directory")->required();

  CLI::App* mse = app.add_subcommand("mse", "run the MSE-vs-shots sweep");
  mse->add_option("--config", config_path, "config file")->required();
  mse->add_option("--out", out_dir, "output directory")->required();
  CLI::Option* seed_opt = mse->add_option("--seed", seed, "master seed");
  mse->add_option("--trials", trials, "trial count override");
  mse->add_option("--profile", profile, "smoke|full")
      ->check(CLI::IsMember({"smoke", "full"}));

  CLI::App* validate =
      app.add_subcommand("validate-config", "parse and validate a config");
  validate->add_option("path", config_path, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (states->parsed()) return run_states(config_path, out_dir);
    if (mse->parsed()) {
      return run_mse(config_path, out_dir, seed, seed_opt->count() > 0, trials,
                     profile);
    }
    return run_validate(config_path);
  } catch (const qem::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
