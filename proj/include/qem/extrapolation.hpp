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

#ifndef QEM_EXTRAPOLATION_HPP_
#define QEM_EXTRAPOLATION_HPP_

#include <vector>

#include "qem/estimate_report.hpp"

namespace qem {

// Lagrange zero-intercept weights on nodes xs: w_i = prod_{j!=i} x_j/(x_j-x_i).
// They always sum to 1. Throws DuplicateNode on coinciding nodes.
std::vector<double> lagrange_intercept_weights(const std::vector<double>& xs);

// Richardson extrapolation in the algorithmic error rate eps_M = 1/M.
// `variances` (optional, per point, single-shot scale) propagate as
// sum w_i^2 Var_i.
EstimateReport trotter_extrapolate(const std::vector<int>& trotter_numbers,
                                   const std::vector<double>& values,
                                   const std::vector<double>& variances = {});

// Polynomial zero-noise extrapolation over physical rates p > 0.
EstimateReport poly_physical_extrapolate(const std::vector<double>& rates,
                                         const std::vector<double>& values,
                                         const std::vector<double>& variances = {});

// Two-point exponential extrapolation from v1 at rate p and v2 at rate r*p:
// sign * |v1|^(r/(r-1)) * |v2|^(1/(1-r)). Values must be nonzero and share a
// sign. Predicted variance by first-order error propagation.
EstimateReport exp_physical_extrapolate(double v1, double v2, double r,
                                        double var1 = 0.0, double var2 = 0.0);

struct GridPoint {
  double rate = 0.0;
  int trotter_number = 0;
  double value = 0.0;
  double variance = 0.0;
};

enum class PhysicalFit { Poly, Exp };

// The two-stage method: per Trotter column extrapolate over the physical
// rates (Poly over all rates, Exp over exactly two), then Richardson over the
// per-column intercepts. Variance is propagated through both stages.
EstimateReport sequential_physical_then_trotter(
    const std::vector<GridPoint>& table, PhysicalFit mode);

// Nodes on the constrained curve M = floor(c / sqrt(p)).
struct NodeSet {
  double p_base = 0.0;
  double c = 0.0;
  std::vector<double> lambdas;        // ascending, lambda_0 = 1
  std::vector<double> rates;          // lambda_i * p_base
  std::vector<int> trotter_numbers;   // floor(c / sqrt(rate_i))
  std::vector<double> coefficients;   // g_i, sum to 1
};

// g_i = prod_{j!=i} sqrt(lambda_j) / (sqrt(lambda_j) - sqrt(lambda_i)).
// Throws DegenerateLambdas, ZeroTrotter, DuplicateNode (coinciding M),
// InvalidRate.
NodeSet data_efficient_nodes(double c, const std::vector<double>& lambdas,
                             double p_base);

// sum_i g_i * value_i with variance sum_i g_i^2 Var_i.
EstimateReport data_efficient_estimate(const NodeSet& nodes,
                                       const std::vector<double>& values,
                                       const std::vector<double>& variances = {});

}  // namespace qem

#endif  // QEM_EXTRAPOLATION_HPP_
