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

#ifndef QEM_DUAL_HPP_
#define QEM_DUAL_HPP_

#include <vector>

#include "qem/noise.hpp"
#include "qem/trotter.hpp"

namespace qem {

// One gate followed by its depolarizing channel (rate 0 = no noise).
struct ProcessStep {
  Gate gate;
  double noise_rate = 0.0;
  bool noise_is_global = false;
};

// A gate/noise channel sequence, applied first step first.
struct NoisyProcess {
  int n_qubits = 0;
  std::vector<ProcessStep> steps;
};

NoisyProcess build_forward_process(const TrotterCircuit& circ,
                                   const NoiseSpec& noise);

// The uncomputation: inverse gates in reverse order, each followed by the
// same noise channel as its forward counterpart.
NoisyProcess build_reverse_process(const TrotterCircuit& circ,
                                   const NoiseSpec& noise);

DensityMatrix apply_process(const NoisyProcess& proc, const DensityMatrix& rho);

// The Hilbert-Schmidt adjoint of the process. Depolarizing channels have
// Hermitian Kraus operators and are self-adjoint, so this applies the steps
// in reverse order with the noise before the conjugation by U'.
DensityMatrix apply_process_adjoint(const NoisyProcess& proc,
                                    const DensityMatrix& rho);

// The dual state of the circuit: adjoint of the reverse process applied to
// |0...0><0...0|. Equals the forward output exactly in the noiseless case.
DensityMatrix dual_state(const TrotterCircuit& circ, const NoiseSpec& noise);

}  // namespace qem

#endif  // QEM_DUAL_HPP_
