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

#ifndef QEM_MATRIX_HPP_
#define QEM_MATRIX_HPP_

#include <complex>

#include <Eigen/Dense>

namespace qem {

using Complex = std::complex<double>;
// Row-major so the dense kernels can walk rows contiguously.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numeric tolerances used by validation checks throughout the library.
// Overridable as a unit (e.g. from a harness config).
struct Tolerances {
  double hermitian = 1e-12;      // max|A - A'| relative to max|A|
  double trace = 1e-10;          // |Tr(rho) - 1|
  double psd = -1e-10;           // eigenvalue floor for PSD checks
  double unitary = 1e-9;         // max|U'U - I|
  double imag_discard = 1e-9;    // imaginary residue discarded by expectation()
  double coefficient_sum = 1e-10;
};

Tolerances& tolerances();

bool is_power_of_two(Eigen::Index n);

// log2 of a power-of-two dimension. Throws InvalidArgument otherwise.
int qubit_count_for_dim(Eigen::Index dim);

double max_abs(const ComplexMatrix& a);

// max|A - A'| over all entries.
double hermiticity_gap(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double rel_tol);

ComplexMatrix identity_matrix(Eigen::Index dim);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// exp(scale * H) for Hermitian H, by eigendecomposition. Unitary by
// construction when scale is purely imaginary. Throws NonHermitianInput.
ComplexMatrix matexp_hermitian(const ComplexMatrix& h, Complex scale);

// Tr(A B) in O(dim^2).
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a Hermitian matrix, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace qem

#endif  // QEM_MATRIX_HPP_
