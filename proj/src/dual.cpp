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

#include "qem/dual.hpp"

#include "qem/errors.hpp"

namespace qem {

namespace {

void apply_step_noise(ComplexMatrix& rho, const ProcessStep& step,
                      int n_qubits) {
  if (step.noise_rate == 0.0) return;
  if (step.noise_is_global) {
    apply_global_depolarizing_inplace(rho, step.noise_rate);
  } else {
    apply_local_depolarizing_inplace(rho, step.noise_rate, step.gate.support,
                                     n_qubits);
  }
}

}  // namespace

NoisyProcess build_forward_process(const TrotterCircuit& circ,
                                   const NoiseSpec& noise) {
  noise.validate();
  NoisyProcess proc;
  proc.n_qubits = circ.n_qubits;
  proc.steps.reserve(circ.gates.size());
  std::size_t in_step = 0;
  for (const Gate& gate : circ.gates) {
    ProcessStep step;
    step.gate = gate;
    if (noise.mode == NoiseMode::Local) {
      step.noise_rate = noise.local_rate_for_support(gate.support.size());
    } else if (++in_step == circ.gates_per_step) {
      in_step = 0;
      step.noise_rate = noise.p_global;
      step.noise_is_global = true;
    }
    proc.steps.push_back(std::move(step));
  }
  return proc;
}

NoisyProcess build_reverse_process(const TrotterCircuit& circ,
                                   const NoiseSpec& noise) {
  const NoisyProcess forward = build_forward_process(circ, noise);
  NoisyProcess rev;
  rev.n_qubits = forward.n_qubits;
  rev.steps.reserve(forward.steps.size());
  for (auto it = forward.steps.rbegin(); it != forward.steps.rend(); ++it) {
    ProcessStep step = *it;
    step.gate.unitary = it->gate.unitary.adjoint();
    rev.steps.push_back(std::move(step));
  }
  return rev;
}

DensityMatrix apply_process(const NoisyProcess& proc,
                            const DensityMatrix& rho) {
  if (rho.n_qubits() != proc.n_qubits) {
    throw DimensionMismatch("apply_process: qubit-count mismatch");
  }
  ComplexMatrix state = rho.matrix();
  for (const ProcessStep& step : proc.steps) {
    apply_gate_inplace(state, step.gate.unitary, step.gate.support,
                       proc.n_qubits);
    apply_step_noise(state, step, proc.n_qubits);
  }
  return DensityMatrix(std::move(state));
}

DensityMatrix apply_process_adjoint(const NoisyProcess& proc,
                                    const DensityMatrix& rho) {
  if (rho.n_qubits() != proc.n_qubits) {
    throw DimensionMismatch("apply_process_adjoint: qubit-count mismatch");
  }
  ComplexMatrix state = rho.matrix();
  for (auto it = proc.steps.rbegin(); it != proc.steps.rend(); ++it) {
    apply_step_noise(state, *it, proc.n_qubits);
    const ComplexMatrix u_adj = it->gate.unitary.adjoint();
    apply_gate_inplace(state, u_adj, it->gate.support, proc.n_qubits);
  }
  return DensityMatrix(std::move(state));
}

DensityMatrix dual_state(const TrotterCircuit& circ, const NoiseSpec& noise) {
  const NoisyProcess rev = build_reverse_process(circ, noise);
  return apply_process_adjoint(rev, DensityMatrix::zero_state(circ.n_qubits));
}

}  // namespace qem
