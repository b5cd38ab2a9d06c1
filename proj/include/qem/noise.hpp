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

#ifndef QEM_NOISE_HPP_
#define QEM_NOISE_HPP_

#include <span>
#include <vector>

#include "qem/density_matrix.hpp"
#include "qem/matrix.hpp"

namespace qem {

enum class NoiseMode { Global, Local };

// Physical error-rate configuration. Global mode applies one global
// depolarizing channel per Trotter step; local mode applies a 1- or 2-qubit
// depolarizing channel after every gate.
struct NoiseSpec {
  NoiseMode mode = NoiseMode::Local;
  double p_global = 0.0;  // per Trotter step
  double p1 = 0.0;        // per single-qubit gate
  double p2 = 0.0;        // per two-qubit gate

  static NoiseSpec global(double p_global);
  static NoiseSpec local(double p1, double p2);
  static NoiseSpec noiseless() { return local(0.0, 0.0); }

  double local_rate_for_support(std::size_t support_size) const;
  bool is_noiseless() const;
  void validate() const;  // throws InvalidRate
};

// rho -> (1-p) rho + (p/2^n) I.
DensityMatrix apply_global_depolarizing(const DensityMatrix& rho, double p);
void apply_global_depolarizing_inplace(ComplexMatrix& rho, double p);

// rho -> (1-p) rho + p Tr_support(rho) (x) I_support / 2^|support|, with the
// mixed factor re-embedded at the support position. Support size 1 or 2.
DensityMatrix apply_local_depolarizing(const DensityMatrix& rho, double p,
                                       std::span<const int> support);
void apply_local_depolarizing_inplace(ComplexMatrix& rho, double p,
                                      std::span<const int> support,
                                      int n_qubits);

// min(n * p_local, 1): the global-equivalent rate of n per-depth local faults.
double local_to_global_rate(int n, double p_local);

// Kraus operators of a channel on the support dimension.
struct KrausSet {
  std::vector<ComplexMatrix> operators;

  // max|sum K'K - I|
  double completeness_gap() const;
};

// Canonical Pauli Kraus decomposition of the k-qubit depolarizing channel:
// sqrt(1 - p + p/4^k) I and sqrt(p/4^k) P for the 4^k - 1 non-identity words.
KrausSet depolarizing_kraus(int k_qubits, double p);

}  // namespace qem

#endif  // QEM_NOISE_HPP_
