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

#include "qem/hamiltonian.hpp"

#include <string>

#include "qem/errors.hpp"

namespace qem {

ComplexMatrix Hamiltonian::matrix() const {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (const PauliString& term : terms) {
    for (Eigen::Index col = 0; col < d; ++col) {
      const auto c = static_cast<std::uint64_t>(col);
      h(static_cast<Eigen::Index>(term.permuted_index(c)), col) +=
          term.coefficient() * term.phase(c);
    }
  }
  return h;
}

void Hamiltonian::validate() const {
  std::vector<int> seen(terms.size(), 0);
  for (const auto& layer : layers) {
    for (std::size_t idx : layer) {
      if (idx >= terms.size()) {
        throw InvalidArgument("Hamiltonian: layer references term " +
                              std::to_string(idx) + " out of range");
      }
      ++seen[idx];
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 1) {
      throw InvalidArgument("Hamiltonian: term " + std::to_string(i) +
                            " covered " + std::to_string(seen[i]) +
                            " times by the layers");
    }
  }
  for (const PauliString& term : terms) {
    if (term.n_qubits() != n_qubits) {
      throw DimensionMismatch("Hamiltonian: term qubit-count mismatch");
    }
  }
}

Hamiltonian build_tfim(int n) {
  if (n < 2) throw InvalidQubitCount("build_tfim: n must be >= 2");
  Hamiltonian h;
  h.n_qubits = n;
  std::vector<std::size_t> zz_layer;
  std::vector<std::size_t> x_layer;
  for (int i = 0; i < n; ++i) {
    std::string letters(static_cast<std::size_t>(n), 'I');
    letters[static_cast<std::size_t>(i)] = 'Z';
    letters[static_cast<std::size_t>((i + 1) % n)] = 'Z';
    zz_layer.push_back(h.terms.size());
    h.terms.emplace_back(std::move(letters), -1.0);
  }
  for (int i = 0; i < n; ++i) {
    x_layer.push_back(h.terms.size());
    h.terms.push_back(PauliString::single(n, 'X', i, -1.0));
  }
  h.layers = {std::move(zz_layer), std::move(x_layer)};
  return h;
}

DensityMatrix exact_evolve(const Hamiltonian& h, double t,
                           const DensityMatrix& rho0) {
  if (rho0.n_qubits() != h.n_qubits) {
    throw DimensionMismatch("exact_evolve: qubit-count mismatch");
  }
  const ComplexMatrix u = matexp_hermitian(h.matrix(), Complex(0.0, -t));
  ComplexMatrix evolved = u * rho0.matrix() * u.adjoint();
  return DensityMatrix(std::move(evolved));
}

}  // namespace qem
