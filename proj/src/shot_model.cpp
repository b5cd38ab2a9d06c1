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

#include "qem/shot_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qem/errors.hpp"

namespace qem {

namespace {

// SplitMix64 step; the standard finalizer keeps derived seeds uncorrelated.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

ShotBudget allocate_shots(std::int64_t total, int circuit_count) {
  if (total < 1 || circuit_count < 1) {
    throw InvalidArgument("allocate_shots: total and circuit count must be >= 1");
  }
  if (total < circuit_count) {
    throw InsufficientShots("allocate_shots: " + std::to_string(total) +
                            " shots cannot cover " +
                            std::to_string(circuit_count) + " circuits");
  }
  ShotBudget budget;
  budget.total = total;
  budget.circuit_count = circuit_count;
  budget.per_circuit = total / circuit_count;
  budget.remainder = total - budget.per_circuit * circuit_count;
  return budget;
}

double single_shot_var_pauli(double mean) {
  if (std::abs(mean) > 1.0 + 1e-9) {
    throw OutOfRange("single_shot_var_pauli: |mean| = " +
                     std::to_string(std::abs(mean)) + " exceeds 1");
  }
  return std::max(0.0, 1.0 - mean * mean);
}

double ShotRng::uniform() {
  // 53-bit mantissa in (0, 1].
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double ShotRng::standard_normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path) {
  std::uint64_t seed = splitmix64(master);
  for (std::uint64_t component : path) {
    seed = splitmix64(seed ^ component);
  }
  return seed;
}

NoisySample inject_shot_noise(double ideal, double var_single,
                              std::int64_t n_shots, ShotRng& rng) {
  if (var_single < 0.0) {
    throw InvalidArgument("inject_shot_noise: negative variance");
  }
  if (n_shots < 1) {
    throw InvalidShots("inject_shot_noise: n_shots must be >= 1");
  }
  NoisySample sample;
  sample.ideal = ideal;
  sample.single_shot_variance = var_single;
  sample.shots = n_shots;
  sample.rng_seed = rng.seed();
  sample.sampled =
      var_single == 0.0
          ? ideal
          : ideal + rng.standard_normal() *
                        std::sqrt(var_single / static_cast<double>(n_shots));
  return sample;
}

double var_extrapolation(const std::vector<double>& variances,
                         const std::vector<double>& coefficients) {
  if (variances.size() != coefficients.size()) {
    throw LengthMismatch("var_extrapolation: length mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < variances.size(); ++i) {
    sum += coefficients[i] * coefficients[i] * variances[i];
  }
  return sum;
}

double var_vd(const VdPrimitives& prims, double estimator_value) {
  if (prims.purity < 1e-14) {
    throw DegenerateDenominator("var_vd: Tr(rho^2) = " +
                                std::to_string(prims.purity));
  }
  double sum = 0.0;
  for (std::size_t alpha = 0; alpha < prims.coefficients.size(); ++alpha) {
    const double c = prims.coefficients[alpha];
    sum += c * c * single_shot_var_pauli(prims.numerators[alpha]);
  }
  sum += estimator_value * estimator_value * single_shot_var_pauli(prims.purity);
  return sum / (prims.purity * prims.purity);
}

double var_vd(const DensityMatrix& rho,
              const std::vector<PauliString>& observable,
              double estimator_value) {
  return var_vd(compute_vd_primitives(rho, observable), estimator_value);
}

double var_tse(const TsePrimitives& prims, const std::vector<double>& g,
               double estimator_value) {
  const int k = prims.node_count();
  if (static_cast<int>(g.size()) != k) {
    throw LengthMismatch("var_tse: weights length mismatch");
  }
  double den = 0.0;
  double den_noise = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double gi = g[static_cast<std::size_t>(i)];
      const double gj = g[static_cast<std::size_t>(j)];
      const double overlap = prims.overlaps[static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(j)];
      den += gi * gj * overlap;
      den_noise += gi * gi * gj * gj * single_shot_var_pauli(overlap);
    }
  }
  if (std::abs(den) < 1e-14) {
    throw DegenerateDenominator("var_tse: denominator " + std::to_string(den));
  }
  double numerator_noise = 0.0;
  for (std::size_t alpha = 0; alpha < prims.coefficients.size(); ++alpha) {
    const double c2 = prims.coefficients[alpha] * prims.coefficients[alpha];
    for (int i = 0; i < k; ++i) {
      const double gi = g[static_cast<std::size_t>(i)];
      numerator_noise +=
          c2 * gi * gi * gi * gi *
          single_shot_var_pauli(prims.diag[alpha][static_cast<std::size_t>(i)]);
    }
    for (std::size_t pair = 0; pair < prims.pair_index.size(); ++pair) {
      const auto& [i, j] = prims.pair_index[pair];
      const double gi = g[static_cast<std::size_t>(i)];
      const double gj = g[static_cast<std::size_t>(j)];
      numerator_noise += 4.0 * c2 * gi * gi * gj * gj *
                         single_shot_var_pauli(prims.cross[alpha][pair]);
    }
  }
  const double total =
      numerator_noise + estimator_value * estimator_value * den_noise;
  return total / (den * den);
}

double var_tse(const std::vector<DensityMatrix>& states,
               const std::vector<double>& g,
               const std::vector<PauliString>& observable,
               double estimator_value) {
  return var_tse(compute_tse_primitives(states, observable), g,
                 estimator_value);
}

}  // namespace qem
