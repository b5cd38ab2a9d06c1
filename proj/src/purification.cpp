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

#include "qem/purification.hpp"

#include <cmath>
#include <string>

#include "qem/errors.hpp"

namespace qem {

namespace {

constexpr double kDenominatorFloor = 1e-14;
constexpr double kUnphysicalFloor = -1e-8;

void check_same_shape(const std::vector<DensityMatrix>& states) {
  if (states.empty()) throw InvalidArgument("estimator: no states");
  for (const DensityMatrix& s : states) {
    if (s.dim() != states.front().dim()) {
      throw DimensionMismatch("estimator: states differ in dimension");
    }
  }
}

void check_weights(const std::vector<DensityMatrix>& states,
                   const std::vector<double>& g) {
  if (states.size() != g.size()) {
    throw LengthMismatch("estimator: weights length does not match states");
  }
}

double real_with_residue_check(Complex z, const char* what) {
  if (std::abs(z.imag()) >= tolerances().imag_discard) {
    throw ToleranceViolation(std::string(what) + ": imaginary residue " +
                             std::to_string(z.imag()));
  }
  return z.real();
}

ComplexMatrix weighted_state_sum(const std::vector<DensityMatrix>& states,
                                 const std::vector<double>& g) {
  ComplexMatrix sum =
      ComplexMatrix::Zero(states.front().dim(), states.front().dim());
  for (std::size_t i = 0; i < states.size(); ++i) {
    sum += g[i] * states[i].matrix();
  }
  return sum;
}

}  // namespace

EstimateReport vd_estimate(const DensityMatrix& rho, const ComplexMatrix& a,
                           int copies) {
  if (copies < 2) throw InvalidArgument("vd_estimate: copies must be >= 2");
  if (a.rows() != rho.dim() || a.cols() != rho.dim()) {
    throw DimensionMismatch("vd_estimate: observable dimension mismatch");
  }
  ComplexMatrix power = rho.matrix();
  for (int i = 1; i < copies; ++i) power = power * rho.matrix();
  const double den = power.trace().real();
  if (den < kDenominatorFloor) {
    throw DegenerateDenominator("vd_estimate: Tr(rho^L) = " +
                                std::to_string(den));
  }
  const double num =
      real_with_residue_check(trace_product(power, a), "vd_estimate");
  EstimateReport report;
  report.method = Method::VirtualDistillation;
  report.value = num / den;
  report.denominator = den;
  return report;
}

EstimateReport vd_estimate(const DensityMatrix& rho,
                           const std::vector<PauliString>& observable,
                           int copies) {
  if (copies < 2) throw InvalidArgument("vd_estimate: copies must be >= 2");
  if (observable.empty()) throw InvalidArgument("vd_estimate: no observable");
  ComplexMatrix power = rho.matrix();
  for (int i = 2; i < copies; ++i) power = power * rho.matrix();
  // power = rho^(L-1); each trace closes the loop with one more factor.
  const double den =
      real_with_residue_check(trace_product(power, rho.matrix()), "vd_estimate");
  if (den < kDenominatorFloor) {
    throw DegenerateDenominator("vd_estimate: Tr(rho^L) = " +
                                std::to_string(den));
  }
  double num = 0.0;
  for (const PauliString& term : observable) {
    num += real_with_residue_check(
        trace_product_pauli(power, rho.matrix(), term), "vd_estimate");
  }
  EstimateReport report;
  report.method = Method::VirtualDistillation;
  report.value = num / den;
  report.denominator = den;
  return report;
}

EstimateReport tse_estimate(const std::vector<DensityMatrix>& states,
                            const std::vector<double>& g,
                            const ComplexMatrix& a) {
  check_same_shape(states);
  check_weights(states, g);
  if (a.rows() != states.front().dim() || a.cols() != states.front().dim()) {
    throw DimensionMismatch("tse_estimate: observable dimension mismatch");
  }
  const std::size_t k = states.size();
  std::vector<ComplexMatrix> rho_a(k);
  for (std::size_t j = 0; j < k; ++j) rho_a[j] = states[j].matrix() * a;

  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double w = g[i] * g[j];
      num += w * trace_product(states[i].matrix(), rho_a[j]);
      den += w * real_with_residue_check(
                     trace_product(states[i].matrix(), states[j].matrix()),
                     "tse_estimate overlap");
    }
  }
  if (den <= kDenominatorFloor) {
    throw DegenerateDenominator("tse_estimate: denominator " +
                                std::to_string(den));
  }

  EstimateReport report;
  report.method = Method::SubspaceExpansion;
  report.value = real_with_residue_check(num, "tse_estimate") / den;
  report.denominator = den;

  // Effective state rho_TS^2 / Tr(rho_TS^2): unit trace and PSD by
  // construction; reported from the spectrum of rho_TS.
  const RealVector evals = hermitian_eigenvalues(weighted_state_sum(states, g));
  const double sum_sq = evals.array().square().sum();
  if (sum_sq > kDenominatorFloor) {
    report.effective_min_eigenvalue = evals.array().square().minCoeff() / sum_sq;
    report.effective_trace = evals.array().square().sum() / sum_sq;
  }
  return report;
}

EstimateReport tse_estimate(const std::vector<DensityMatrix>& states,
                            const std::vector<double>& g,
                            const std::vector<PauliString>& observable) {
  check_weights(states, g);
  const TsePrimitives prims = compute_tse_primitives(states, observable);
  EstimateReport report;
  report.method = Method::SubspaceExpansion;
  report.value = tse_value_from_primitives(prims, g);
  double den = 0.0;
  const int k = prims.node_count();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      den += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] *
             prims.overlaps[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(j)];
    }
  }
  report.denominator = den;
  const RealVector evals = hermitian_eigenvalues(weighted_state_sum(states, g));
  const double sum_sq = evals.array().square().sum();
  if (sum_sq > kDenominatorFloor) {
    report.effective_min_eigenvalue = evals.array().square().minCoeff() / sum_sq;
    report.effective_trace = evals.array().square().sum() / sum_sq;
  }
  return report;
}

namespace {

EstimateReport dual_estimate_impl(const std::vector<DensityMatrix>& states,
                                  const std::vector<DensityMatrix>& duals,
                                  const std::vector<double>& g,
                                  const ComplexMatrix& a, bool symmetrized) {
  check_same_shape(states);
  check_weights(states, g);
  if (duals.size() != states.size()) {
    throw LengthMismatch("dual_estimate: duals length does not match states");
  }
  for (const DensityMatrix& d : duals) {
    if (d.dim() != states.front().dim()) {
      throw DimensionMismatch("dual_estimate: dual dimension mismatch");
    }
  }
  const std::size_t k = states.size();
  std::vector<ComplexMatrix> dual_a(k);
  for (std::size_t j = 0; j < k; ++j) dual_a[j] = duals[j].matrix() * a;

  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double w = g[i] * g[j];
      const Complex tr_ija = trace_product(states[i].matrix(), dual_a[j]);
      num += w * (symmetrized ? Complex(tr_ija.real(), 0.0) : tr_ija);
      den += w * real_with_residue_check(
                     trace_product(states[i].matrix(), duals[j].matrix()),
                     "dual_estimate overlap");
    }
  }
  if (den <= kDenominatorFloor) {
    throw DegenerateDenominator("dual_estimate: denominator " +
                                std::to_string(den));
  }
  EstimateReport report;
  report.method = symmetrized ? Method::DualPurificationV1
                              : Method::DualPurificationV2;
  report.value = real_with_residue_check(num, "dual_estimate numerator") / den;
  report.denominator = den;
  return report;
}

}  // namespace

EstimateReport dual_estimate_v1(const std::vector<DensityMatrix>& states,
                                const std::vector<DensityMatrix>& duals,
                                const std::vector<double>& g,
                                const ComplexMatrix& a) {
  // Tr((rho_i dual_j + dual_j rho_i)/2 A) = Re Tr(rho_i dual_j A).
  return dual_estimate_impl(states, duals, g, a, /*symmetrized=*/true);
}

EstimateReport dual_estimate_v2(const std::vector<DensityMatrix>& states,
                                const std::vector<DensityMatrix>& duals,
                                const std::vector<double>& g,
                                const ComplexMatrix& a) {
  return dual_estimate_impl(states, duals, g, a, /*symmetrized=*/false);
}

PhysicalityReport physicality_diagnostics(const std::vector<double>& g,
                                          const std::vector<DensityMatrix>& states,
                                          const ComplexMatrix& observable) {
  check_same_shape(states);
  check_weights(states, g);
  if (!is_hermitian(observable, tolerances().hermitian)) {
    throw NonHermitianObservable(
        "physicality_diagnostics: observable is not Hermitian");
  }
  const ComplexMatrix extra = weighted_state_sum(states, g);
  const RealVector evals = hermitian_eigenvalues(extra);
  PhysicalityReport report;
  report.min_eigenvalue = evals.minCoeff();
  report.trace = extra.trace().real();
  report.operator_norm = evals.cwiseAbs().maxCoeff();
  report.expectation_abs = std::abs(trace_product(observable, extra));
  report.observable_trace_norm =
      hermitian_eigenvalues(observable).cwiseAbs().sum();
  report.bound = report.operator_norm * report.observable_trace_norm;
  report.flagged = report.min_eigenvalue < kUnphysicalFloor;
  return report;
}

int TsePrimitives::circuit_count() const {
  const int k = node_count();
  const int n_alpha = static_cast<int>(coefficients.size());
  return n_alpha * (k + k * (k - 1) / 2) + k * k;
}

TsePrimitives compute_tse_primitives(const std::vector<DensityMatrix>& states,
                                     const std::vector<PauliString>& observable) {
  check_same_shape(states);
  if (observable.empty()) {
    throw InvalidArgument("compute_tse_primitives: no observable");
  }
  const std::size_t k = states.size();
  TsePrimitives prims;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      prims.pair_index.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  prims.overlaps.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const double overlap = real_with_residue_check(
          trace_product(states[i].matrix(), states[j].matrix()),
          "tse overlap");
      prims.overlaps[i][j] = overlap;
      prims.overlaps[j][i] = overlap;
    }
  }
  for (const PauliString& term : observable) {
    prims.coefficients.push_back(term.coefficient());
    const PauliString unit = term.with_coefficient(1.0);
    std::vector<double> diag(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      diag[i] = real_with_residue_check(
          trace_product_pauli(states[i].matrix(), states[i].matrix(), unit),
          "tse diagonal trace");
    }
    std::vector<double> cross;
    for (const auto& [i, j] : prims.pair_index) {
      // Symmetrized Tr((rho_i rho_j + rho_j rho_i)/2 P) = Re Tr(rho_i rho_j P).
      cross.push_back(trace_product_pauli(
                          states[static_cast<std::size_t>(i)].matrix(),
                          states[static_cast<std::size_t>(j)].matrix(), unit)
                          .real());
    }
    prims.diag.push_back(std::move(diag));
    prims.cross.push_back(std::move(cross));
  }
  return prims;
}

double tse_value_from_primitives(const TsePrimitives& prims,
                                 const std::vector<double>& g) {
  const int k = prims.node_count();
  if (static_cast<int>(g.size()) != k) {
    throw LengthMismatch("tse_value_from_primitives: weights length mismatch");
  }
  double num = 0.0;
  for (std::size_t alpha = 0; alpha < prims.coefficients.size(); ++alpha) {
    double term = 0.0;
    for (int i = 0; i < k; ++i) {
      const double gi = g[static_cast<std::size_t>(i)];
      term += gi * gi * prims.diag[alpha][static_cast<std::size_t>(i)];
    }
    for (std::size_t pair = 0; pair < prims.pair_index.size(); ++pair) {
      const auto& [i, j] = prims.pair_index[pair];
      term += 2.0 * g[static_cast<std::size_t>(i)] *
              g[static_cast<std::size_t>(j)] * prims.cross[alpha][pair];
    }
    num += prims.coefficients[alpha] * term;
  }
  double den = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      den += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] *
             prims.overlaps[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(j)];
    }
  }
  if (den <= kDenominatorFloor) {
    throw DegenerateDenominator("tse: denominator " + std::to_string(den));
  }
  return num / den;
}

VdPrimitives compute_vd_primitives(const DensityMatrix& rho,
                                   const std::vector<PauliString>& observable) {
  if (observable.empty()) {
    throw InvalidArgument("compute_vd_primitives: no observable");
  }
  VdPrimitives prims;
  prims.purity = real_with_residue_check(
      trace_product(rho.matrix(), rho.matrix()), "vd purity");
  for (const PauliString& term : observable) {
    prims.coefficients.push_back(term.coefficient());
    prims.numerators.push_back(real_with_residue_check(
        trace_product_pauli(rho.matrix(), rho.matrix(),
                            term.with_coefficient(1.0)),
        "vd numerator"));
  }
  return prims;
}

double vd_value_from_primitives(const VdPrimitives& prims) {
  if (prims.purity < kDenominatorFloor) {
    throw DegenerateDenominator("vd: Tr(rho^2) = " +
                                std::to_string(prims.purity));
  }
  double num = 0.0;
  for (std::size_t alpha = 0; alpha < prims.coefficients.size(); ++alpha) {
    num += prims.coefficients[alpha] * prims.numerators[alpha];
  }
  return num / prims.purity;
}

}  // namespace qem
