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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qem/errors.hpp"
#include "qem/extrapolation.hpp"
#include "qem/hamiltonian.hpp"
#include "qem/noise.hpp"
#include "qem/purification.hpp"
#include "qem/trotter.hpp"

namespace qem {
namespace {

using testutil::make_rng;
using testutil::random_density;

TEST(TrotterExtrapolate, ConstantInputReturnsConstant) {
  const EstimateReport report =
      trotter_extrapolate({8, 16, 32}, {0.7, 0.7, 0.7});
  EXPECT_NEAR(report.value, 0.7, 1e-12);
  double sum = 0.0;
  for (double w : report.coefficients) sum += w;
  EXPECT_NEAR(sum, 1.0, 1e-10);
}

TEST(TrotterExtrapolate, TwoPointRichardsonIsExactOnLinear) {
  auto value = [](int m) { return 0.3 - 1.7 / static_cast<double>(m); };
  const EstimateReport report =
      trotter_extrapolate({10, 20}, {value(10), value(20)});
  EXPECT_NEAR(report.value, 0.3, 1e-12);
}

TEST(TrotterExtrapolate, QuadraticSyntheticOracle) {
  auto value = [](int m) {
    const double eps = 1.0 / static_cast<double>(m);
    return 0.42 - 1.3 * eps + 2.6 * eps * eps;
  };
  const EstimateReport report = trotter_extrapolate(
      {8, 16, 32}, {value(8), value(16), value(32)});
  EXPECT_NEAR(report.value, 0.42, 1e-10);
}

TEST(TrotterExtrapolate, VariancePropagation) {
  const EstimateReport report =
      trotter_extrapolate({8, 16}, {0.5, 0.6}, {1.0, 1.0});
  double expected = 0.0;
  for (double w : report.coefficients) expected += w * w;
  EXPECT_NEAR(report.predicted_variance, expected, 1e-12);
}

TEST(TrotterExtrapolate, RejectsDuplicateNodes) {
  EXPECT_THROW(trotter_extrapolate({8, 8}, {0.5, 0.6}), DuplicateNode);
}

TEST(PolyPhysicalExtrapolate, ConstantAndExactPolynomial) {
  EXPECT_NEAR(poly_physical_extrapolate({1e-3, 2e-3}, {0.9, 0.9}).value, 0.9,
              1e-12);
  auto value = [](double p) { return 0.8 - 3.0 * p + 40.0 * p * p; };
  const EstimateReport report = poly_physical_extrapolate(
      {1e-3, 2e-3, 3e-3}, {value(1e-3), value(2e-3), value(3e-3)});
  EXPECT_NEAR(report.value, 0.8, 1e-10);
}

TEST(PolyPhysicalExtrapolate, TwoPointClosedForm) {
  const double p = 2e-3;
  const double v1 = 0.71, v2 = 0.64;
  const EstimateReport report = poly_physical_extrapolate({p, 2 * p}, {v1, v2});
  EXPECT_NEAR(report.value, 2 * v1 - v2, 1e-12);
}

TEST(PolyPhysicalExtrapolate, RejectsBadNodes) {
  EXPECT_THROW(poly_physical_extrapolate({1e-3, 1e-3}, {0.5, 0.6}),
               DuplicateNode);
  EXPECT_THROW(poly_physical_extrapolate({0.0, 1e-3}, {0.5, 0.6}),
               InvalidRate);
}

TEST(ExpPhysicalExtrapolate, EqualValuesAndExactExponential) {
  EXPECT_NEAR(exp_physical_extrapolate(0.44, 0.44, 2.0).value, 0.44, 1e-12);
  const double p = 0.01, r = 2.0;
  const double v1 = 3.0 * std::exp(-5.0 * p);
  const double v2 = 3.0 * std::exp(-5.0 * r * p);
  EXPECT_NEAR(exp_physical_extrapolate(v1, v2, r).value, 3.0, 1e-10);
  // Negative branch keeps the sign.
  EXPECT_NEAR(exp_physical_extrapolate(-v1, -v2, r).value, -3.0, 1e-10);
}

TEST(ExpPhysicalExtrapolate, RejectsSignMismatchAndZero) {
  EXPECT_THROW(exp_physical_extrapolate(0.5, -0.4, 2.0), SignMismatch);
  EXPECT_THROW(exp_physical_extrapolate(0.0, 0.4, 2.0), ZeroValue);
  EXPECT_THROW(exp_physical_extrapolate(0.5, 0.4, 1.0), InvalidArgument);
}

std::vector<GridPoint> make_table(
    const std::vector<std::pair<double, int>>& grid,
    const std::function<double(double, int)>& value) {
  std::vector<GridPoint> table;
  for (const auto& [p, m] : grid) {
    table.push_back(GridPoint{.rate = p,
                              .trotter_number = m,
                              .value = value(p, m),
                              .variance = 0.0});
  }
  return table;
}

const std::vector<std::pair<double, int>> kSixStateGrid = {
    {2e-4, 18}, {3e-4, 18}, {1e-4, 22}, {2e-4, 22}, {1e-4, 31}, {2e-4, 31}};

TEST(Sequential, ConstantTableReturnsConstant) {
  const auto table = make_table(kSixStateGrid, [](double, int) { return 0.55; });
  EXPECT_NEAR(sequential_physical_then_trotter(table, PhysicalFit::Poly).value,
              0.55, 1e-12);
  EXPECT_NEAR(sequential_physical_then_trotter(table, PhysicalFit::Exp).value,
              0.55, 1e-12);
}

TEST(Sequential, SeparableSyntheticOracle) {
  // v(p, M) = a + b p + c / M is exact for linear-in-p stage-1 fits and a
  // first-order Richardson stage.
  const double a = 0.37, b = -11.0, c = 2.2;
  const auto table = make_table(kSixStateGrid, [&](double p, int m) {
    return a + b * p + c / static_cast<double>(m);
  });
  const EstimateReport report =
      sequential_physical_then_trotter(table, PhysicalFit::Poly);
  EXPECT_NEAR(report.value, a, 1e-9);
  EXPECT_EQ(report.method, Method::SequentialPoly);
}

TEST(Sequential, ExponentialSyntheticOracle) {
  // v(p, M) = (a + c/M) exp(-beta p): the per-column exponential fit recovers
  // a + c/M exactly, and the Richardson stage removes c/M.
  const double a = 0.6, c = -1.4, beta = 90.0;
  const auto table = make_table(kSixStateGrid, [&](double p, int m) {
    return (a + c / static_cast<double>(m)) * std::exp(-beta * p);
  });
  const EstimateReport report =
      sequential_physical_then_trotter(table, PhysicalFit::Exp);
  EXPECT_NEAR(report.value, a, 1e-9);
  EXPECT_EQ(report.method, Method::SequentialExp);
}

TEST(Sequential, RejectsInsufficientGrids) {
  // Single M column.
  auto table = make_table({{1e-4, 22}, {2e-4, 22}},
                          [](double, int) { return 0.5; });
  EXPECT_THROW(sequential_physical_then_trotter(table, PhysicalFit::Poly),
               InsufficientGrid);
  // One rate in a column.
  table = make_table({{1e-4, 22}, {2e-4, 22}, {1e-4, 31}},
                     [](double, int) { return 0.5; });
  EXPECT_THROW(sequential_physical_then_trotter(table, PhysicalFit::Poly),
               InsufficientGrid);
  // Exponential mode with three rates in a column.
  table = make_table({{1e-4, 22}, {2e-4, 22}, {3e-4, 22}, {1e-4, 31}, {2e-4, 31}},
                     [](double, int) { return 0.5; });
  EXPECT_THROW(sequential_physical_then_trotter(table, PhysicalFit::Exp),
               InsufficientGrid);
}

TEST(DataEfficientNodes, ReproducesBenchmarkTrotterNumbers) {
  const NodeSet nodes = data_efficient_nodes(1.0, {1.0, 2.0, 3.0}, 1e-3);
  ASSERT_EQ(nodes.trotter_numbers.size(), 3u);
  EXPECT_EQ(nodes.trotter_numbers[0], 31);
  EXPECT_EQ(nodes.trotter_numbers[1], 22);
  EXPECT_EQ(nodes.trotter_numbers[2], 18);
  EXPECT_NEAR(nodes.rates[0], 1e-3, 1e-15);
  EXPECT_NEAR(nodes.rates[1], 2e-3, 1e-15);
  EXPECT_NEAR(nodes.rates[2], 3e-3, 1e-15);
}

TEST(DataEfficientNodes, TwoNodeLagrangeIdentity) {
  const NodeSet nodes = data_efficient_nodes(1.0, {1.0, 2.0}, 1e-3);
  const double s2 = std::sqrt(2.0);
  EXPECT_NEAR(nodes.coefficients[0], s2 / (s2 - 1.0), 1e-12);
  EXPECT_NEAR(nodes.coefficients[1], 1.0 / (1.0 - s2), 1e-12);
  EXPECT_NEAR(nodes.coefficients[0] + nodes.coefficients[1], 1.0, 1e-12);
}

TEST(DataEfficientNodes, VandermondeSolveOracle) {
  const std::vector<double> lambdas = {1.0, 2.0, 3.0};
  const NodeSet nodes = data_efficient_nodes(1.0, lambdas, 1e-3);
  // Solve sum_i g_i (sqrt(lambda_i))^k = delta_{k0} for k = 0, 1, 2.
  Eigen::Matrix3d vandermonde;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      vandermonde(k, i) =
          std::pow(std::sqrt(lambdas[static_cast<std::size_t>(i)]), k);
    }
  }
  Eigen::Vector3d rhs(1.0, 0.0, 0.0);
  const Eigen::Vector3d g = vandermonde.colPivHouseholderQr().solve(rhs);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(nodes.coefficients[static_cast<std::size_t>(i)], g(i), 1e-10);
  }
}

TEST(DataEfficientNodes, RejectsDegenerateInputs) {
  EXPECT_THROW(data_efficient_nodes(1.0, {1.0, 1.0}, 1e-3),
               DegenerateLambdas);
  EXPECT_THROW(data_efficient_nodes(1.0, {2.0, 3.0}, 1e-3), InvalidArgument);
  EXPECT_THROW(data_efficient_nodes(0.5, {1.0}, 0.5), ZeroTrotter);
  // Distinct lambdas collapsing onto the same Trotter number.
  EXPECT_THROW(data_efficient_nodes(1.0, {1.0, 1.0001}, 1e-3), DuplicateNode);
  EXPECT_THROW(data_efficient_nodes(1.0, {1.0, 2.0}, 0.0), InvalidRate);
  EXPECT_THROW(data_efficient_nodes(1.0, {1.0, 2.0}, 0.6), InvalidRate);
}

TEST(DataEfficientEstimate, ConstantAndSqrtPolynomialOracle) {
  const NodeSet nodes = data_efficient_nodes(1.0, {1.0, 2.0, 3.0}, 1e-3);
  EXPECT_NEAR(data_efficient_estimate(nodes, {0.5, 0.5, 0.5}).value, 0.5,
              1e-12);
  // Values polynomial of degree 2 in sqrt(lambda): intercept recovered.
  auto value = [](double lambda) {
    const double x = std::sqrt(lambda);
    return 0.9 - 0.4 * x + 0.07 * x * x;
  };
  const EstimateReport report =
      data_efficient_estimate(nodes, {value(1.0), value(2.0), value(3.0)});
  EXPECT_NEAR(report.value, 0.9, 1e-10);
}

TEST(DataEfficientEstimate, RejectsLengthMismatch) {
  const NodeSet nodes = data_efficient_nodes(1.0, {1.0, 2.0}, 1e-3);
  EXPECT_THROW(data_efficient_estimate(nodes, {0.5}), LengthMismatch);
}

TEST(DataEfficientEstimate, EndToEndBiasBeatsRawNode) {
  // Scaled-down benchmark: n = 4 with the same node Trotter numbers.
  const int n = 4;
  const Hamiltonian h = build_tfim(n);
  const DensityMatrix rho0 = DensityMatrix::zero_state(n);
  const PauliString x1 = PauliString::single(n, 'X', 0);
  const double exact = expectation(exact_evolve(h, 1.0, rho0), x1);

  const double p2_base = 1e-3 / n;
  const NodeSet nodes =
      data_efficient_nodes(1.0, {1.0, 2.0, 3.0}, n * p2_base);
  std::vector<double> values;
  for (std::size_t i = 0; i < nodes.lambdas.size(); ++i) {
    const NoiseSpec noise =
        NoiseSpec::local(1e-5, nodes.lambdas[i] * p2_base);
    const TrotterCircuit circ =
        build_trotter_circuit(h, 1.0, nodes.trotter_numbers[i]);
    values.push_back(expectation(run_noisy_trotter(circ, noise, rho0), x1));
  }
  const double raw_bias = std::abs(values[0] - exact);
  const double mitigated_bias =
      std::abs(data_efficient_estimate(nodes, values).value - exact);
  EXPECT_LT(mitigated_bias, raw_bias);
}

TEST(VdEstimate, PureStateReducesToExpectation) {
  auto rng = make_rng(50);
  const DensityMatrix pure =
      DensityMatrix::pure(testutil::random_state_vector(4, rng));
  const ComplexMatrix a = testutil::random_hermitian(4, rng);
  EXPECT_NEAR(vd_estimate(pure, a, 2).value, expectation(pure, a), 1e-9);
}

TEST(VdEstimate, MaximallyMixedKillsTracelessObservable) {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  const ComplexMatrix a = pauli_to_matrix(PauliString("XZ"));
  EXPECT_NEAR(vd_estimate(mixed, a, 2).value, 0.0, 1e-12);
}

TEST(VdEstimate, TwoEigenvectorSuppressionOracle) {
  auto rng = make_rng(51);
  const ComplexMatrix basis = testutil::random_unitary(4, rng);
  const ComplexVector phi0 = basis.col(0);
  const ComplexVector phi1 = basis.col(1);
  ComplexMatrix rho_m = 0.9 * (phi0 * phi0.adjoint()).eval() +
                        0.1 * (phi1 * phi1.adjoint()).eval();
  const DensityMatrix rho(std::move(rho_m));
  const ComplexMatrix a = testutil::random_hermitian(4, rng);
  const double a0 = (phi0.adjoint() * a * phi0).value().real();
  const double a1 = (phi1.adjoint() * a * phi1).value().real();

  const double w0 = 0.9 * 0.9, w1 = 0.1 * 0.1;
  const double oracle = (w0 * a0 + w1 * a1) / (w0 + w1);
  EXPECT_NEAR(vd_estimate(rho, a, 2).value, oracle, 1e-10);
  EXPECT_NEAR(w1 / (w0 + w1), 0.0122, 1e-4);

  // Large-L contraction onto the dominant eigenvector.
  const double ratio8 = std::pow(0.1 / 0.9, 8);
  const double norm_a = testutil::trace_norm_svd(a);  // >= operator norm
  const double bound = ratio8 * 2.0 * norm_a / (1.0 - ratio8);
  EXPECT_LE(std::abs(vd_estimate(rho, a, 8).value - a0), bound);
}

TEST(VdEstimate, PauliOverloadMatchesDense) {
  auto rng = make_rng(52);
  const DensityMatrix rho = random_density(2, rng);
  const PauliString term("XI", 0.8);
  const std::vector<PauliString> observable = {term};
  EXPECT_NEAR(vd_estimate(rho, observable, 2).value,
              vd_estimate(rho, pauli_to_matrix(term), 2).value, 1e-10);
  EXPECT_NEAR(vd_estimate(rho, observable, 3).value,
              vd_estimate(rho, pauli_to_matrix(term), 3).value, 1e-10);
}

TEST(VdEstimate, RejectsBadArguments) {
  auto rng = make_rng(53);
  const DensityMatrix rho = random_density(1, rng);
  EXPECT_THROW(vd_estimate(rho, pauli_to_matrix(PauliString("Z")), 1),
               InvalidArgument);
}

TEST(TseEstimate, SingleNodeReducesToVd) {
  auto rng = make_rng(54);
  const DensityMatrix rho = random_density(2, rng);
  const ComplexMatrix a = testutil::random_hermitian(4, rng);
  const std::vector<DensityMatrix> states = {rho};
  const EstimateReport tse = tse_estimate(states, {1.0}, a);
  EXPECT_NEAR(tse.value, vd_estimate(rho, a, 2).value, 1e-10);
}

TEST(TseEstimate, IdenticalStatesAnyWeights) {
  auto rng = make_rng(55);
  const DensityMatrix rho = random_density(2, rng);
  const ComplexMatrix a = testutil::random_hermitian(4, rng);
  const std::vector<DensityMatrix> states = {rho, rho, rho};
  const EstimateReport tse = tse_estimate(states, {2.0, -0.5, -0.5}, a);
  EXPECT_NEAR(tse.value, vd_estimate(rho, a, 2).value, 1e-9);
}

TEST(TseEstimate, BruteForceTraceOracleAndOperatorNormBound) {
  auto rng = make_rng(56);
  const std::vector<DensityMatrix> states = {random_density(2, rng),
                                             random_density(2, rng)};
  const std::vector<double> g = {2.0, -1.0};
  const ComplexMatrix a = testutil::random_hermitian(4, rng);

  Complex num = 0.0, den = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ComplexMatrix prod = states[static_cast<std::size_t>(i)].matrix() *
                                 states[static_cast<std::size_t>(j)].matrix();
      num += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] *
             (prod * a).trace();
      den += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] *
             prod.trace();
    }
  }
  const EstimateReport report = tse_estimate(states, g, a);
  EXPECT_NEAR(report.value, num.real() / den.real(), 1e-10);

  const double op_norm = hermitian_eigenvalues(a).cwiseAbs().maxCoeff();
  EXPECT_LE(std::abs(report.value), op_norm + 1e-8);
  EXPECT_NEAR(report.effective_trace, 1.0, 1e-10);
  EXPECT_GE(report.effective_min_eigenvalue, -1e-10);
}

TEST(TseEstimate, EffectiveStateIsAlwaysPhysical) {
  auto rng = make_rng(57);
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  int tested = 0;
  for (int sample = 0; sample < 50; ++sample) {
    const int count = 2 + static_cast<int>(rng() % 2);
    std::vector<DensityMatrix> states;
    std::vector<double> g;
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
      states.push_back(random_density(2, rng));
      const double w = unit(rng);
      g.push_back(w);
      sum += w;
    }
    // Rescale to sum 1 as the node rule guarantees.
    if (std::abs(sum) < 0.1) continue;
    for (double& w : g) w /= sum;
    const ComplexMatrix a = testutil::random_hermitian(4, rng);
    try {
      const EstimateReport report = tse_estimate(states, g, a);
      const double op_norm = hermitian_eigenvalues(a).cwiseAbs().maxCoeff();
      EXPECT_LE(std::abs(report.value), op_norm + 1e-8);
      EXPECT_GE(report.effective_min_eigenvalue, -1e-10);
      EXPECT_NEAR(report.effective_trace, 1.0, 1e-10);
      ++tested;
    } catch (const DegenerateDenominator&) {
      // Skip degenerate node sets.
    }
  }
  EXPECT_GE(tested, 40);
}

TEST(TseEstimate, PauliOverloadMatchesDense) {
  auto rng = make_rng(58);
  const std::vector<DensityMatrix> states = {random_density(2, rng),
                                             random_density(2, rng)};
  const std::vector<double> g = {1.6, -0.6};
  const PauliString term("ZX", -1.2);
  const std::vector<PauliString> observable = {term};
  EXPECT_NEAR(tse_estimate(states, g, observable).value,
              tse_estimate(states, g, pauli_to_matrix(term)).value, 1e-10);
}

TEST(TseEstimate, DegenerateCombinationRaises) {
  auto rng = make_rng(59);
  const DensityMatrix rho = random_density(2, rng);
  const std::vector<DensityMatrix> states = {rho, rho};
  const ComplexMatrix a = testutil::random_hermitian(4, rng);
  // g = (1, -1) makes rho_TS vanish identically.
  EXPECT_THROW(tse_estimate(states, {1.0, -1.0}, a), DegenerateDenominator);
}

TEST(DualEstimators, NoiselessDualsReduceToTse) {
  auto rng = make_rng(60);
  const std::vector<DensityMatrix> states = {random_density(2, rng),
                                             random_density(2, rng)};
  const std::vector<double> g = {1.8, -0.8};
  const ComplexMatrix a = testutil::random_hermitian(4, rng);
  const double tse = tse_estimate(states, g, a).value;
  EXPECT_NEAR(dual_estimate_v1(states, states, g, a).value, tse, 1e-9);
  EXPECT_NEAR(dual_estimate_v2(states, states, g, a).value, tse, 1e-9);
}

TEST(DualEstimators, SinglePureStateGivesRawExpectation) {
  auto rng = make_rng(61);
  const DensityMatrix pure =
      DensityMatrix::pure(testutil::random_state_vector(4, rng));
  const ComplexMatrix a = testutil::random_hermitian(4, rng);
  const std::vector<DensityMatrix> states = {pure};
  EXPECT_NEAR(dual_estimate_v1(states, states, {1.0}, a).value,
              expectation(pure, a), 1e-9);
}

TEST(DualEstimators, AgreeOnCommutingFamilyAndMatchBruteForce) {
  // Diagonal states and duals: all products are Hermitian, so v1 = v2 and the
  // unsymmetrized numerator is real.
  auto rng = make_rng(62);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  auto random_diagonal = [&](double offset) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    double trace = 0.0;
    for (int i = 0; i < 4; ++i) {
      m(i, i) = unit(rng) + offset;
      trace += m(i, i).real();
    }
    return DensityMatrix(ComplexMatrix(m / trace));
  };
  const std::vector<DensityMatrix> states = {random_diagonal(0.0),
                                             random_diagonal(0.2)};
  const std::vector<DensityMatrix> duals = {random_diagonal(0.1),
                                            random_diagonal(0.3)};
  const std::vector<double> g = {2.0, -1.0};
  const ComplexMatrix a = pauli_to_matrix(PauliString("ZI", 0.7));

  const EstimateReport v1 = dual_estimate_v1(states, duals, g, a);
  const EstimateReport v2 = dual_estimate_v2(states, duals, g, a);
  EXPECT_NEAR(v1.value, v2.value, 1e-10);

  Complex num = 0.0, den = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto si = static_cast<std::size_t>(i);
      const auto sj = static_cast<std::size_t>(j);
      num += g[si] * g[sj] *
             (states[si].matrix() * duals[sj].matrix() * a).trace();
      den += g[si] * g[sj] * (states[si].matrix() * duals[sj].matrix()).trace();
    }
  }
  EXPECT_NEAR(v2.value, num.real() / den.real(), 1e-10);
  EXPECT_LT(std::abs(num.imag()), 1e-10);
}

TEST(DualEstimators, V2GuardsAgainstImaginaryResidue) {
  // Strongly non-commuting states give the unsymmetrized numerator a genuine
  // imaginary part, which v2 refuses to discard silently.
  auto rng = make_rng(63);
  const std::vector<DensityMatrix> states = {random_density(2, rng),
                                             random_density(2, rng)};
  const std::vector<DensityMatrix> duals = {random_density(2, rng),
                                            random_density(2, rng)};
  const std::vector<double> g = {2.0, -1.0};
  const ComplexMatrix a = testutil::random_hermitian(4, rng);
  EXPECT_THROW(dual_estimate_v2(states, duals, g, a), ToleranceViolation);
  // The symmetrized variant handles the same input.
  EXPECT_NO_THROW(dual_estimate_v1(states, duals, g, a));
}

TEST(PhysicalityDiagnostics, PhysicalAndConstructedNegativeCases) {
  auto rng = make_rng(64);
  const DensityMatrix rho = random_density(2, rng);
  const ComplexMatrix a = pauli_to_matrix(PauliString("XI"));
  const PhysicalityReport healthy =
      physicality_diagnostics({1.0}, {rho}, a);
  EXPECT_FALSE(healthy.flagged);
  EXPECT_GE(healthy.min_eigenvalue, -1e-10);
  EXPECT_NEAR(healthy.trace, 1.0, 1e-10);
  EXPECT_LE(healthy.expectation_abs, healthy.bound + 1e-9);

  ComplexVector zero(2), one(2);
  zero << 1, 0;
  one << 0, 1;
  const PhysicalityReport flagged = physicality_diagnostics(
      {2.0, -1.0}, {DensityMatrix::pure(zero), DensityMatrix::pure(one)},
      pauli_to_matrix(PauliString("Z")));
  EXPECT_TRUE(flagged.flagged);
  EXPECT_NEAR(flagged.min_eigenvalue, -1.0, 1e-12);
  EXPECT_NEAR(flagged.operator_norm, 2.0, 1e-12);
  EXPECT_NEAR(flagged.trace, 1.0, 1e-12);
  EXPECT_LE(flagged.expectation_abs, flagged.bound + 1e-9);
}

TEST(SqrtPStructure, ConstrainedFamilyPrefersSqrtExpansion) {
  // Along M = floor(c / sqrt(p)) the observable is smooth in sqrt(p): a
  // degree-2 fit in sqrt(p) beats the same fit in p by a wide margin.
  const int n = 4;
  const Hamiltonian h = build_tfim(n);
  const DensityMatrix rho0 = DensityMatrix::zero_state(n);
  const PauliString x1 = PauliString::single(n, 'X', 0);
  std::vector<double> ps, sqrt_ps, values;
  for (double p : {1e-3, 2e-3, 3e-3, 4e-3, 5e-3, 6e-3}) {
    const int m = static_cast<int>(std::floor(1.0 / std::sqrt(p)));
    const TrotterCircuit circ = build_trotter_circuit(h, 1.0, m);
    const DensityMatrix out =
        run_noisy_trotter(circ, NoiseSpec::global(p), rho0);
    ps.push_back(p);
    sqrt_ps.push_back(std::sqrt(p));
    values.push_back(expectation(out, x1));
  }
  const double residual_sqrt = testutil::polyfit(sqrt_ps, values, 2).residual_norm;
  const double residual_linear = testutil::polyfit(ps, values, 2).residual_norm;
  EXPECT_GE(residual_linear, 5.0 * residual_sqrt);
}

}  // namespace
}  // namespace qem
