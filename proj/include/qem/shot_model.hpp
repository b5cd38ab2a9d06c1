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

#ifndef QEM_SHOT_MODEL_HPP_
#define QEM_SHOT_MODEL_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "qem/density_matrix.hpp"
#include "qem/purification.hpp"

namespace qem {

enum class AllocationPolicy { EqualSplit };

struct ShotBudget {
  std::int64_t total = 0;
  std::int64_t per_circuit = 0;
  std::int64_t remainder = 0;  // shots discarded by the equal split
  int circuit_count = 0;
  AllocationPolicy policy = AllocationPolicy::EqualSplit;
};

// EqualSplit: per_circuit = floor(total / circuit_count). Throws
// InsufficientShots when total < circuit_count.
ShotBudget allocate_shots(std::int64_t total, int circuit_count);

// Single-shot variance of a +/-1-valued Pauli outcome: max(0, 1 - mean^2).
// Throws OutOfRange when |mean| > 1 + 1e-9.
double single_shot_var_pauli(double mean);

// Deterministic Gaussian source. The engine is the standardized mt19937_64;
// the normal draw is an explicit Box-Muller because the stdlib
// distributions' output sequences are implementation-defined.
class ShotRng {
 public:
  explicit ShotRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  double uniform();          // (0, 1]
  double standard_normal();  // N(0, 1)

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Fixed splittable scheme deriving per-circuit sub-seeds from the master
// seed, so parallel execution order cannot change results.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path);

struct NoisySample {
  double ideal = 0.0;
  double sampled = 0.0;
  double single_shot_variance = 0.0;
  std::int64_t shots = 0;
  std::uint64_t rng_seed = 0;
};

// ideal + g with g ~ N(0, var_single / n_shots) from the supplied generator.
NoisySample inject_shot_noise(double ideal, double var_single,
                              std::int64_t n_shots, ShotRng& rng);

// sum_i g_i^2 Var_i.
double var_extrapolation(const std::vector<double>& variances,
                         const std::vector<double>& coefficients);

// Single-shot variance of the two-copy virtual-distillation estimator:
// (1/Tr(rho^2)^2) [sum_a c_a^2 (1 - Tr(rho^2 P_a)^2)
//                  + est^2 (1 - Tr(rho^2)^2)].
double var_vd(const VdPrimitives& prims, double estimator_value);
double var_vd(const DensityMatrix& rho,
              const std::vector<PauliString>& observable,
              double estimator_value);

// Single-shot variance of the subspace-expansion estimator (ratio-variance
// approximation): diagonal g_i^4 terms, off-diagonal 4 g_i^2 g_j^2 terms, and
// the denominator-noise term est^2 sum_ij g_i^2 g_j^2 (1 - Tr(rho_i rho_j)^2),
// all divided by (sum_ij g_i g_j Tr(rho_i rho_j))^2.
double var_tse(const TsePrimitives& prims, const std::vector<double>& g,
               double estimator_value);
double var_tse(const std::vector<DensityMatrix>& states,
               const std::vector<double>& g,
               const std::vector<PauliString>& observable,
               double estimator_value);

}  // namespace qem

#endif  // QEM_SHOT_MODEL_HPP_
