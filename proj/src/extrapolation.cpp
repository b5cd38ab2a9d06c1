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

#include "qem/extrapolation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qem/errors.hpp"
#include "qem/matrix.hpp"

namespace qem {

const char* method_name(Method m) {
  switch (m) {
    case Method::Raw: return "raw";
    case Method::TrotterExtrapolation: return "trotter_extrapolation";
    case Method::PolynomialExtrapolation: return "poly_extrapolation";
    case Method::ExponentialExtrapolation: return "exp_extrapolation";
    case Method::SequentialPoly: return "seq_poly";
    case Method::SequentialExp: return "seq_exp";
    case Method::DataEfficient: return "data_efficient";
    case Method::VirtualDistillation: return "vd";
    case Method::SubspaceExpansion: return "tse";
    case Method::DualPurificationV1: return "dual_v1";
    case Method::DualPurificationV2: return "dual_v2";
  }
  return "unknown";
}

namespace {

std::vector<double> zeros_if_empty(const std::vector<double>& variances,
                                   std::size_t n) {
  if (variances.empty()) return std::vector<double>(n, 0.0);
  if (variances.size() != n) {
    throw LengthMismatch("variance list length does not match node count");
  }
  return variances;
}

double weighted_sum(const std::vector<double>& w, const std::vector<double>& v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * v[i];
  return sum;
}

double weighted_var(const std::vector<double>& w, const std::vector<double>& v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * w[i] * v[i];
  return sum;
}

}  // namespace

std::vector<double> lagrange_intercept_weights(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  if (n == 0) throw InvalidArgument("lagrange weights: no nodes");
  std::vector<double> w(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double gap = xs[j] - xs[i];
      if (std::abs(gap) <= 1e-15 * std::max(std::abs(xs[i]), std::abs(xs[j]))) {
        throw DuplicateNode("coinciding nodes at value " +
                            std::to_string(xs[i]));
      }
      w[i] *= xs[j] / gap;
    }
  }
  return w;
}

EstimateReport trotter_extrapolate(const std::vector<int>& trotter_numbers,
                                   const std::vector<double>& values,
                                   const std::vector<double>& variances) {
  if (trotter_numbers.size() < 2) {
    throw InvalidArgument("trotter_extrapolate: need at least 2 points");
  }
  if (trotter_numbers.size() != values.size()) {
    throw LengthMismatch("trotter_extrapolate: points length mismatch");
  }
  std::vector<double> eps(trotter_numbers.size());
  for (std::size_t i = 0; i < trotter_numbers.size(); ++i) {
    if (trotter_numbers[i] < 1) {
      throw InvalidTrotterNumber("trotter_extrapolate: M must be >= 1");
    }
    eps[i] = 1.0 / static_cast<double>(trotter_numbers[i]);
  }
  const std::vector<double> vars = zeros_if_empty(variances, values.size());
  EstimateReport report;
  report.method = Method::TrotterExtrapolation;
  report.coefficients = lagrange_intercept_weights(eps);
  report.value = weighted_sum(report.coefficients, values);
  report.predicted_variance = weighted_var(report.coefficients, vars);
  return report;
}

EstimateReport poly_physical_extrapolate(const std::vector<double>& rates,
                                         const std::vector<double>& values,
                                         const std::vector<double>& variances) {
  if (rates.size() < 2) {
    throw InvalidArgument("poly_physical_extrapolate: need at least 2 points");
  }
  if (rates.size() != values.size()) {
    throw LengthMismatch("poly_physical_extrapolate: points length mismatch");
  }
  for (double p : rates) {
    if (!(p > 0.0)) {
      throw InvalidRate("poly_physical_extrapolate: rates must be > 0");
    }
  }
  const std::vector<double> vars = zeros_if_empty(variances, values.size());
  EstimateReport report;
  report.method = Method::PolynomialExtrapolation;
  report.coefficients = lagrange_intercept_weights(rates);
  report.value = weighted_sum(report.coefficients, values);
  report.predicted_variance = weighted_var(report.coefficients, vars);
  return report;
}

EstimateReport exp_physical_extrapolate(double v1, double v2, double r,
                                        double var1, double var2) {
  if (!(r > 1.0)) {
    throw InvalidArgument("exp_physical_extrapolate: r must be > 1");
  }
  if (v1 == 0.0 || v2 == 0.0) {
    throw ZeroValue("exp_physical_extrapolate: exponential fit undefined at 0");
  }
  if ((v1 > 0.0) != (v2 > 0.0)) {
    throw SignMismatch("exp_physical_extrapolate: values differ in sign");
  }
  const double a = r / (r - 1.0);
  const double b = 1.0 / (1.0 - r);
  const double sign = v1 > 0.0 ? 1.0 : -1.0;
  EstimateReport report;
  report.method = Method::ExponentialExtrapolation;
  report.value = sign * std::pow(std::abs(v1), a) * std::pow(std::abs(v2), b);
  // First-order propagation: d(est)/dv1 = a est / v1, d(est)/dv2 = b est / v2.
  const double d1 = a * report.value / v1;
  const double d2 = b * report.value / v2;
  report.predicted_variance = d1 * d1 * var1 + d2 * d2 * var2;
  report.coefficients = {a, b};
  return report;
}

EstimateReport sequential_physical_then_trotter(
    const std::vector<GridPoint>& table, PhysicalFit mode) {
  std::map<int, std::vector<GridPoint>> columns;
  for (const GridPoint& point : table) {
    columns[point.trotter_number].push_back(point);
  }
  if (columns.size() < 2) {
    throw InsufficientGrid("sequential: need at least 2 distinct M");
  }

  std::vector<int> ms;
  std::vector<double> intercepts;
  std::vector<double> intercept_vars;
  for (auto& [m, column] : columns) {
    std::sort(column.begin(), column.end(),
              [](const GridPoint& a, const GridPoint& b) {
                return a.rate < b.rate;
              });
    if (column.size() < 2 || column[0].rate == column[1].rate) {
      throw InsufficientGrid("sequential: column M = " + std::to_string(m) +
                             " needs at least 2 distinct rates");
    }
    EstimateReport stage1;
    if (mode == PhysicalFit::Poly) {
      std::vector<double> rates, values, vars;
      for (const GridPoint& point : column) {
        rates.push_back(point.rate);
        values.push_back(point.value);
        vars.push_back(point.variance);
      }
      stage1 = poly_physical_extrapolate(rates, values, vars);
    } else {
      if (column.size() != 2) {
        throw InsufficientGrid(
            "sequential: exponential mode takes exactly 2 rates per column, "
            "column M = " + std::to_string(m) + " has " +
            std::to_string(column.size()));
      }
      const double r = column[1].rate / column[0].rate;
      stage1 = exp_physical_extrapolate(column[0].value, column[1].value, r,
                                        column[0].variance,
                                        column[1].variance);
    }
    ms.push_back(m);
    intercepts.push_back(stage1.value);
    intercept_vars.push_back(stage1.predicted_variance);
  }

  EstimateReport report =
      trotter_extrapolate(ms, intercepts, intercept_vars);
  report.method =
      mode == PhysicalFit::Poly ? Method::SequentialPoly : Method::SequentialExp;
  return report;
}

NodeSet data_efficient_nodes(double c, const std::vector<double>& lambdas,
                             double p_base) {
  if (!(c > 0.0)) throw InvalidArgument("data_efficient_nodes: c must be > 0");
  if (lambdas.empty() || std::abs(lambdas.front() - 1.0) > 1e-12) {
    throw InvalidArgument("data_efficient_nodes: lambda_0 must equal 1");
  }
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > lambdas[i - 1])) {
      throw DegenerateLambdas(
          "data_efficient_nodes: lambdas must be strictly ascending");
    }
  }
  if (!(p_base > 0.0 && p_base <= 1.0)) {
    throw InvalidRate("data_efficient_nodes: p_base outside (0, 1]");
  }

  NodeSet nodes;
  nodes.c = c;
  nodes.p_base = p_base;
  nodes.lambdas = lambdas;
  std::vector<double> sqrt_lambdas;
  for (double lambda : lambdas) {
    const double p = lambda * p_base;
    if (p > 1.0) {
      throw InvalidRate("data_efficient_nodes: scaled rate " +
                        std::to_string(p) + " exceeds 1");
    }
    const int m = static_cast<int>(std::floor(c / std::sqrt(p)));
    if (m < 1) {
      throw ZeroTrotter("data_efficient_nodes: floor(c/sqrt(p)) < 1 at p = " +
                        std::to_string(p));
    }
    if (std::find(nodes.trotter_numbers.begin(), nodes.trotter_numbers.end(),
                  m) != nodes.trotter_numbers.end()) {
      throw DuplicateNode(
          "data_efficient_nodes: distinct lambdas map to the same M = " +
          std::to_string(m));
    }
    nodes.rates.push_back(p);
    nodes.trotter_numbers.push_back(m);
    sqrt_lambdas.push_back(std::sqrt(lambda));
  }
  nodes.coefficients = lagrange_intercept_weights(sqrt_lambdas);
  double sum = 0.0;
  for (double g : nodes.coefficients) sum += g;
  if (std::abs(sum - 1.0) > tolerances().coefficient_sum) {
    throw ToleranceViolation("data_efficient_nodes: coefficients sum to " +
                             std::to_string(sum));
  }
  return nodes;
}

EstimateReport data_efficient_estimate(const NodeSet& nodes,
                                       const std::vector<double>& values,
                                       const std::vector<double>& variances) {
  if (values.size() != nodes.coefficients.size()) {
    throw LengthMismatch("data_efficient_estimate: values length mismatch");
  }
  const std::vector<double> vars = zeros_if_empty(variances, values.size());
  EstimateReport report;
  report.method = Method::DataEfficient;
  report.coefficients = nodes.coefficients;
  report.value = weighted_sum(report.coefficients, values);
  report.predicted_variance = weighted_var(report.coefficients, vars);
  return report;
}

}  // namespace qem
