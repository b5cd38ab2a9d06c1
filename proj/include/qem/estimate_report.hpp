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

#ifndef QEM_ESTIMATE_REPORT_HPP_
#define QEM_ESTIMATE_REPORT_HPP_

#include <limits>
#include <vector>

namespace qem {

enum class Method {
  Raw,
  TrotterExtrapolation,
  PolynomialExtrapolation,
  ExponentialExtrapolation,
  SequentialPoly,
  SequentialExp,
  DataEfficient,
  VirtualDistillation,
  SubspaceExpansion,
  DualPurificationV1,
  DualPurificationV2,
};

const char* method_name(Method m);

// Output of every estimator: the point value, the predicted variance at
// single-shot scale (0 when the caller supplied no per-node variances), and
// diagnostics filled where they apply.
struct EstimateReport {
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

  double value = 0.0;
  double predicted_variance = 0.0;
  Method method = Method::Raw;

  // Node weights for linear-combination estimators.
  std::vector<double> coefficients;
  // Ratio estimators record their denominator.
  double denominator = kUnset;
  // |value - exact| when the caller knows the exact value.
  double bias_proxy = kUnset;
  // Effective-state diagnostics (subspace expansion).
  double effective_trace = kUnset;
  double effective_min_eigenvalue = kUnset;
};

}  // namespace qem

#endif  // QEM_ESTIMATE_REPORT_HPP_
