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

#ifndef QEM_HAMILTONIAN_HPP_
#define QEM_HAMILTONIAN_HPP_

#include <cstddef>
#include <vector>

#include "qem/density_matrix.hpp"
#include "qem/pauli.hpp"

namespace qem {

// Weighted Pauli terms partitioned into Trotter layers. The layers must cover
// every term index exactly once.
struct Hamiltonian {
  int n_qubits = 0;
  std::vector<PauliString> terms;
  std::vector<std::vector<std::size_t>> layers;

  ComplexMatrix matrix() const;

  // Throws InvalidArgument if the layers are not a partition of the terms.
  void validate() const;
};

// H = -sum_i Z_i Z_{i+1} - sum_i X_i with periodic boundary (Z_{n+1} = Z_1).
// The periodic sum keeps the n = 2 duplicate ZZ term. Layers: [ZZ], [X].
Hamiltonian build_tfim(int n);

// U rho0 U' with U = exp(-iHt) from the full Hamiltonian matrix.
DensityMatrix exact_evolve(const Hamiltonian& h, double t,
                           const DensityMatrix& rho0);

}  // namespace qem

#endif  // QEM_HAMILTONIAN_HPP_
