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

#ifndef QEM_PURIFICATION_HPP_
#define QEM_PURIFICATION_HPP_

#include <vector>

#include "qem/density_matrix.hpp"
#include "qem/estimate_report.hpp"
#include "qem/pauli.hpp"

namespace qem {

// Virtual distillation: Tr(rho^L A) / Tr(rho^L) for L >= 2.
EstimateReport vd_estimate(const DensityMatrix& rho, const ComplexMatrix& a,
                           int copies);
EstimateReport vd_estimate(const DensityMatrix& rho,
                           const std::vector<PauliString>& observable,
                           int copies);

// Trotter subspace expansion over states rho_i with weights g_i:
//   sum_ij g_i g_j Tr(rho_i rho_j A) / sum_ij g_i g_j Tr(rho_i rho_j).
// The report carries the effective-state diagnostics of
// rho_TS^2 / Tr(rho_TS^2) (trace and minimum eigenvalue).
EstimateReport tse_estimate(const std::vector<DensityMatrix>& states,
                            const std::vector<double>& g,
                            const ComplexMatrix& a);
EstimateReport tse_estimate(const std::vector<DensityMatrix>& states,
                            const std::vector<double>& g,
                            const std::vector<PauliString>& observable);

// Dual-state subspace expansion, symmetrized numerator:
//   sum_ij g_i g_j Tr((rho_i dual_j + dual_j rho_i)/2 A)
//   / sum_ij g_i g_j Tr(rho_i dual_j).
EstimateReport dual_estimate_v1(const std::vector<DensityMatrix>& states,
                                const std::vector<DensityMatrix>& duals,
                                const std::vector<double>& g,
                                const ComplexMatrix& a);

// Unsymmetrized variant: numerator sum_ij g_i g_j Tr(rho_i dual_j A); its
// imaginary residue must stay below tolerances().imag_discard.
EstimateReport dual_estimate_v2(const std::vector<DensityMatrix>& states,
                                const std::vector<DensityMatrix>& duals,
                                const std::vector<double>& g,
                                const ComplexMatrix& a);

// Diagnostics for the effective state rho_extra = sum_i g_i rho_i of a linear
// extrapolation estimator, including the operator-norm expectation bound
// |Tr(A rho_extra)| <= ||rho_extra||_op Tr|A| for the given observable.
struct PhysicalityReport {
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  double operator_norm = 0.0;
  double expectation_abs = 0.0;
  double observable_trace_norm = 0.0;
  double bound = 0.0;  // operator_norm * observable_trace_norm
  bool flagged = false;
};

PhysicalityReport physicality_diagnostics(const std::vector<double>& g,
                                          const std::vector<DensityMatrix>& states,
                                          const ComplexMatrix& observable);

// The per-circuit trace primitives behind the subspace-expansion estimator,
// i.e. the measurement outcomes of the purification circuits evaluated
// directly from the density matrices. The shot model perturbs these.
struct TsePrimitives {
  std::vector<double> coefficients;              // c_alpha
  std::vector<std::vector<double>> diag;         // [alpha][i]  Tr(rho_i^2 P_alpha)
  std::vector<std::vector<double>> cross;        // [alpha][k]  symmetrized, pairs i<j
  std::vector<std::vector<double>> overlaps;     // [i][j]      Tr(rho_i rho_j)
  std::vector<std::pair<int, int>> pair_index;   // k -> (i, j), i < j

  int node_count() const { return static_cast<int>(overlaps.size()); }
  // Distinct circuits: per alpha the diagonal and i<j terms, plus one
  // overlap circuit per ordered pair.
  int circuit_count() const;
};

TsePrimitives compute_tse_primitives(const std::vector<DensityMatrix>& states,
                                     const std::vector<PauliString>& observable);

// Assembles the estimator value from (possibly noise-injected) primitives.
// Throws DegenerateDenominator.
double tse_value_from_primitives(const TsePrimitives& prims,
                                 const std::vector<double>& g);

// Virtual-distillation primitives for L = 2 (one numerator circuit per
// Pauli term plus the purity circuit).
struct VdPrimitives {
  std::vector<double> coefficients;  // c_alpha
  std::vector<double> numerators;    // Tr(rho^2 P_alpha)
  double purity = 0.0;               // Tr(rho^2)

  int circuit_count() const { return static_cast<int>(numerators.size()) + 1; }
};

VdPrimitives compute_vd_primitives(const DensityMatrix& rho,
                                   const std::vector<PauliString>& observable);

double vd_value_from_primitives(const VdPrimitives& prims);

}  // namespace qem

#endif  // QEM_PURIFICATION_HPP_
