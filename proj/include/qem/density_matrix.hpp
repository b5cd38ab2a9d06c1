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

#ifndef QEM_DENSITY_MATRIX_HPP_
#define QEM_DENSITY_MATRIX_HPP_

#include "qem/matrix.hpp"
#include "qem/pauli.hpp"

namespace qem {

// A 2^n x 2^n quantum state. Construction validates the cheap invariants
// (power-of-two dimension, unit trace, Hermiticity); positivity is O(dim^3)
// and exposed separately via min_eigenvalue() / assert_physical().
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  // Skips validation. For kernels that construct states known to be valid.
  static DensityMatrix unchecked(ComplexMatrix m);

  static DensityMatrix zero_state(int n_qubits);       // |0...0><0...0|
  static DensityMatrix maximally_mixed(int n_qubits);  // I / 2^n
  static DensityMatrix pure(const ComplexVector& psi);

  const ComplexMatrix& matrix() const { return mat_; }
  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return mat_.rows(); }

  double trace_real() const { return mat_.trace().real(); }
  double purity() const;  // Tr(rho^2)
  double min_eigenvalue() const;

  // Full physicality check including the PSD eigenvalue floor.
  void assert_physical() const;

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, Unchecked);

  ComplexMatrix mat_;
  int n_qubits_;
};

// (1/2) Tr sqrt((rho-sigma)'(rho-sigma)), in [0, 1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Re Tr(rho A) for Hermitian A; the imaginary residue must stay below
// tolerances().imag_discard. Throws NonHermitianObservable, DimensionMismatch.
double expectation(const DensityMatrix& rho, const ComplexMatrix& a);
double expectation(const DensityMatrix& rho, const PauliString& p);

}  // namespace qem

#endif  // QEM_DENSITY_MATRIX_HPP_
