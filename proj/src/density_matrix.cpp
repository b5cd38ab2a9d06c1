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

#include "qem/density_matrix.hpp"

#include <cmath>

#include "qem/errors.hpp"

namespace qem {

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) {
    throw InvalidState("density matrix must be square");
  }
  n_qubits_ = qubit_count_for_dim(mat_.rows());
  const double trace_gap = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_gap > tolerances().trace) {
    throw InvalidState("density matrix trace deviates from 1 by " +
                       std::to_string(trace_gap));
  }
  if (!is_hermitian(mat_, tolerances().hermitian)) {
    throw InvalidState("density matrix fails the Hermitian check");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, Unchecked)
    : mat_(std::move(m)), n_qubits_(qubit_count_for_dim(mat_.rows())) {}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
  return DensityMatrix(std::move(m), Unchecked{});
}

DensityMatrix DensityMatrix::zero_state(int n_qubits) {
  if (n_qubits < 1) throw InvalidQubitCount("zero_state: n_qubits < 1");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(0, 0) = 1.0;
  return unchecked(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1) throw InvalidQubitCount("maximally_mixed: n_qubits < 1");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  ComplexMatrix m =
      ComplexMatrix::Identity(d, d) * Complex(1.0 / static_cast<double>(d), 0);
  return unchecked(std::move(m));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw InvalidState("pure: zero vector");
  ComplexVector unit = psi / norm;
  return unchecked(ComplexMatrix(unit * unit.adjoint()));
}

double DensityMatrix::purity() const {
  return trace_product(mat_, mat_).real();
}

double DensityMatrix::min_eigenvalue() const {
  return hermitian_eigenvalues(mat_).minCoeff();
}

void DensityMatrix::assert_physical() const {
  const double trace_gap = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_gap > tolerances().trace) {
    throw InvalidState("state trace deviates from 1 by " +
                       std::to_string(trace_gap));
  }
  if (!is_hermitian(mat_, tolerances().hermitian)) {
    throw InvalidState("state fails the Hermitian check");
  }
  const double min_eig = min_eigenvalue();
  if (min_eig < tolerances().psd) {
    throw InvalidState("state has eigenvalue " + std::to_string(min_eig) +
                       " below the PSD floor");
  }
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("trace_distance: dimension mismatch");
  }
  // The difference is Hermitian, so the trace norm is the sum of |eigenvalue|.
  const RealVector evals =
      hermitian_eigenvalues(rho.matrix() - sigma.matrix());
  return 0.5 * evals.cwiseAbs().sum();
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& a) {
  if (rho.dim() != a.rows() || a.rows() != a.cols()) {
    throw DimensionMismatch("expectation: dimension mismatch");
  }
  if (!is_hermitian(a, tolerances().hermitian)) {
    throw NonHermitianObservable("expectation: observable is not Hermitian");
  }
  const Complex tr = trace_product(rho.matrix(), a);
  if (std::abs(tr.imag()) >= tolerances().imag_discard) {
    throw ToleranceViolation("expectation: imaginary residue " +
                             std::to_string(tr.imag()));
  }
  return tr.real();
}

double expectation(const DensityMatrix& rho, const PauliString& p) {
  if (rho.n_qubits() != p.n_qubits()) {
    throw DimensionMismatch("expectation: qubit-count mismatch");
  }
  const Complex tr = trace_pauli(rho.matrix(), p);
  if (std::abs(tr.imag()) >= tolerances().imag_discard) {
    throw ToleranceViolation("expectation: imaginary residue " +
                             std::to_string(tr.imag()));
  }
  return tr.real();
}

}  // namespace qem
