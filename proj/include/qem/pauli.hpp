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

#ifndef QEM_PAULI_HPP_
#define QEM_PAULI_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qem/matrix.hpp"

namespace qem {

// A weighted n-qubit Pauli word. Site 0 is the leftmost letter and the most
// significant tensor factor; this ordering is fixed globally.
class PauliString {
 public:
  explicit PauliString(std::string letters, double coefficient = 1.0);

  // coefficient * letter at `site`, identity elsewhere.
  static PauliString single(int n_qubits, char letter, int site,
                            double coefficient = 1.0);

  const std::string& letters() const { return letters_; }
  double coefficient() const { return coefficient_; }
  int n_qubits() const { return static_cast<int>(letters_.size()); }
  Eigen::Index dim() const { return Eigen::Index{1} << letters_.size(); }

  bool is_identity() const { return x_mask_ == 0 && yz_mask_ == 0; }

  // Sites carrying a non-identity letter, ascending.
  std::vector<int> support() const;

  // The same word restricted to its support (coefficient preserved).
  // Identity words restrict to a single-site "I".
  PauliString restricted_to_support() const;

  PauliString with_coefficient(double c) const {
    return PauliString(letters_, c);
  }

  // Sparse column action of the unit-coefficient word:
  //   P |col> = phase(col) |permuted_index(col)>.
  std::uint64_t permuted_index(std::uint64_t col) const {
    return col ^ x_mask_;
  }
  Complex phase(std::uint64_t col) const;

 private:
  std::string letters_;
  double coefficient_;
  std::uint64_t x_mask_ = 0;   // bits where the letter is X or Y
  std::uint64_t yz_mask_ = 0;  // bits where the letter is Y or Z
  int y_count_ = 0;
};

// Dense realization: coefficient x (tensor product of single-site Paulis).
ComplexMatrix pauli_to_matrix(const PauliString& p);

// Tr(A P) in O(dim) for the full weighted word.
Complex trace_pauli(const ComplexMatrix& a, const PauliString& p);

// Tr(A B P) in O(dim^2) for the full weighted word.
Complex trace_product_pauli(const ComplexMatrix& a, const ComplexMatrix& b,
                            const PauliString& p);

}  // namespace qem

#endif  // QEM_PAULI_HPP_
