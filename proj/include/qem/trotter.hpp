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

#ifndef QEM_TROTTER_HPP_
#define QEM_TROTTER_HPP_

#include <span>
#include <vector>

#include "qem/density_matrix.hpp"
#include "qem/hamiltonian.hpp"
#include "qem/noise.hpp"

namespace qem {

// A dense 2^k x 2^k unitary acting on `support` (ascending qubit indices;
// support[0] is the most significant gate bit).
struct Gate {
  ComplexMatrix unitary;
  std::vector<int> support;
};

// Order in which the Hamiltonian's layers are emitted inside one Trotter
// step. The TFIM layer list is [ZZ, X]; XThenZz walks it in reverse, i.e. the
// rightmost exponential of the Trotter product is applied first.
enum class LayerOrder { XThenZz, ZzThenX };

struct TrotterCircuit {
  int n_qubits = 0;
  int trotter_number = 0;
  double total_time = 0.0;
  std::size_t gates_per_step = 0;  // step boundaries for per-step noise
  std::vector<Gate> gates;
};

// First-order Trotter circuit: per step, one gate exp(-i (t/M) c P) per term
// (for the TFIM's c = -1 terms this is exp(+i (t/M) Z_i Z_{i+1}) and
// exp(+i (t/M) X_i)), layers emitted in `order`, repeated M times.
TrotterCircuit build_trotter_circuit(const Hamiltonian& h, double t, int m,
                                     LayerOrder order = LayerOrder::XThenZz);

// Executes the circuit on rho0. Local mode: each gate is followed by the
// matching depolarizing channel on its support. Global mode: one global
// depolarizing channel after each Trotter step, including the last.
DensityMatrix run_noisy_trotter(const TrotterCircuit& circ,
                                const NoiseSpec& noise,
                                const DensityMatrix& rho0);

// rho -> U rho U' with U embedded on `support` by index arithmetic.
void apply_gate_inplace(ComplexMatrix& rho, const ComplexMatrix& u,
                        std::span<const int> support, int n_qubits);

// Dense product of all embedded gates (diagnostics; small n only).
ComplexMatrix circuit_unitary(const TrotterCircuit& circ);

}  // namespace qem

#endif  // QEM_TROTTER_HPP_
