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

#include "qem/matrix.hpp"

#include <Eigen/Eigenvalues>

#include "qem/errors.hpp"

namespace qem {

Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int qubit_count_for_dim(Eigen::Index dim) {
  if (!is_power_of_two(dim)) {
    throw InvalidArgument("dimension " + std::to_string(dim) +
                          " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_gap(const ComplexMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  return hermiticity_gap(a) <= rel_tol * std::max(1.0, max_abs(a));
}

ComplexMatrix identity_matrix(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix matexp_hermitian(const ComplexMatrix& h, Complex scale) {
  if (h.rows() != h.cols()) {
    throw DimensionMismatch("matexp_hermitian: matrix is not square");
  }
  if (!is_hermitian(h, tolerances().hermitian)) {
    throw NonHermitianInput("matexp_hermitian: input fails the Hermitian check");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const RealVector& evals = es.eigenvalues();
  ComplexVector phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    phases(i) = std::exp(scale * evals(i));
  }
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw DimensionMismatch("trace_product: incompatible shapes");
  }
  return a.cwiseProduct(b.transpose()).sum();
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a,
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace qem
