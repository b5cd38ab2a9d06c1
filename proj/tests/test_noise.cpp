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
#include "qem/dual.hpp"
#include "qem/errors.hpp"
#include "qem/hamiltonian.hpp"
#include "qem/noise.hpp"
#include "qem/trotter.hpp"

namespace qem {
namespace {

using testutil::make_rng;
using testutil::naive_kron;
using testutil::random_density;

double max_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

DensityMatrix bell_state() {
  ComplexVector psi(4);
  psi << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(psi);
}

TEST(GlobalDepolarizing, EndpointRates) {
  auto rng = make_rng(30);
  const DensityMatrix rho = random_density(2, rng);
  EXPECT_LT(max_gap(apply_global_depolarizing(rho, 0.0).matrix(),
                    rho.matrix()),
            1e-15);
  EXPECT_LT(max_gap(apply_global_depolarizing(rho, 1.0).matrix(),
                    DensityMatrix::maximally_mixed(2).matrix()),
            1e-15);
}

TEST(GlobalDepolarizing, PurityFormulaOracle) {
  auto rng = make_rng(31);
  const int n = 2;
  const DensityMatrix pure =
      DensityMatrix::pure(testutil::random_state_vector(4, rng));
  const double p = 0.5;
  const double dim = std::pow(2.0, n);
  const double expected_purity = (1.0 - p) * (1.0 - p) * pure.purity() +
                                 2.0 * (1.0 - p) * p / dim + p * p / dim;
  EXPECT_NEAR(apply_global_depolarizing(pure, p).purity(), expected_purity,
              1e-12);
}

TEST(GlobalDepolarizing, SelfCompositionCollapsesRates) {
  auto rng = make_rng(32);
  const DensityMatrix rho = random_density(2, rng);
  const double p = 0.3, q = 0.45;
  const DensityMatrix twice =
      apply_global_depolarizing(apply_global_depolarizing(rho, p), q);
  const DensityMatrix once =
      apply_global_depolarizing(rho, 1.0 - (1.0 - p) * (1.0 - q));
  EXPECT_LT(max_gap(twice.matrix(), once.matrix()), 1e-10);
}

TEST(GlobalDepolarizing, RejectsInvalidRate) {
  EXPECT_THROW(
      apply_global_depolarizing(DensityMatrix::zero_state(1), -0.1),
      InvalidRate);
  EXPECT_THROW(apply_global_depolarizing(DensityMatrix::zero_state(1), 1.1),
               InvalidRate);
}

TEST(LocalDepolarizing, EndpointRates) {
  auto rng = make_rng(33);
  const DensityMatrix rho = random_density(2, rng);
  const std::vector<int> support = {0};
  EXPECT_LT(
      max_gap(apply_local_depolarizing(rho, 0.0, support).matrix(),
              rho.matrix()),
      1e-15);
}

TEST(LocalDepolarizing, FullRateMixesOnlyTheSupport) {
  // |01><01| with qubit 0 fully depolarized: I/2 (x) |1><1|.
  ComplexVector psi(4);
  psi << 0, 1, 0, 0;
  const DensityMatrix rho = DensityMatrix::pure(psi);
  const std::vector<int> support = {0};
  const DensityMatrix out = apply_local_depolarizing(rho, 1.0, support);
  ComplexMatrix one(2, 2);
  one << 0, 0, 0, 1;
  const ComplexMatrix expected =
      naive_kron(0.5 * ComplexMatrix::Identity(2, 2), one);
  EXPECT_LT(max_gap(out.matrix(), expected), 1e-15);
}

TEST(LocalDepolarizing, BellStatePartialTraceOracle) {
  const std::vector<int> support = {0};
  const DensityMatrix out = apply_local_depolarizing(bell_state(), 1.0, support);
  // Tr_1(Bell) = I/2, so the output is I/2 (x) I/2.
  EXPECT_LT(max_gap(out.matrix(), 0.25 * ComplexMatrix::Identity(4, 4)),
            1e-15);
}

TEST(LocalDepolarizing, ChannelsAreCptpOnRandomStates) {
  auto rng = make_rng(34);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<int> one_q = {1};
  const std::vector<int> two_q = {0, 2};
  for (int sample = 0; sample < 50; ++sample) {
    const DensityMatrix rho = random_density(3, rng);
    const double p = unit(rng);
    for (const auto* support : {&one_q, &two_q}) {
      const DensityMatrix out = apply_local_depolarizing(rho, p, *support);
      EXPECT_NEAR(out.trace_real(), 1.0, 1e-10);
      EXPECT_GE(out.min_eigenvalue(), -1e-10);
    }
    const DensityMatrix global_out = apply_global_depolarizing(rho, p);
    EXPECT_NEAR(global_out.trace_real(), 1.0, 1e-10);
    EXPECT_GE(global_out.min_eigenvalue(), -1e-10);
  }
}

TEST(LocalDepolarizing, DisjointSupportsCommute) {
  auto rng = make_rng(35);
  const DensityMatrix rho = random_density(3, rng);
  const std::vector<int> a = {0};
  const std::vector<int> b = {1, 2};
  const DensityMatrix ab = apply_local_depolarizing(
      apply_local_depolarizing(rho, 0.3, a), 0.6, b);
  const DensityMatrix ba = apply_local_depolarizing(
      apply_local_depolarizing(rho, 0.6, b), 0.3, a);
  EXPECT_LT(max_gap(ab.matrix(), ba.matrix()), 1e-10);
}

TEST(LocalDepolarizing, RejectsBadSupportAndRate) {
  auto rng = make_rng(36);
  const DensityMatrix rho = random_density(3, rng);
  const std::vector<int> too_big = {0, 1, 2};
  EXPECT_THROW(apply_local_depolarizing(rho, 0.5, too_big),
               UnsupportedSupportSize);
  const std::vector<int> support = {0};
  EXPECT_THROW(apply_local_depolarizing(rho, -0.2, support), InvalidRate);
}

TEST(LocalToGlobalRate, PaperValueAndClamping) {
  EXPECT_NEAR(local_to_global_rate(10, 1e-4), 1e-3, 1e-15);
  EXPECT_DOUBLE_EQ(local_to_global_rate(5, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(local_to_global_rate(10, 0.2), 1.0);
}

TEST(DepolarizingKraus, TracePreservingAndMatchesChannel) {
  auto rng = make_rng(37);
  for (double p : {0.0, 0.2, 1.0}) {
    for (int k = 1; k <= 2; ++k) {
      const KrausSet set = depolarizing_kraus(k, p);
      EXPECT_LT(set.completeness_gap(), 1e-10) << "k=" << k << " p=" << p;
    }
  }
  // Kraus composition reproduces the channel on the full support.
  const DensityMatrix rho2 = random_density(2, rng);
  const KrausSet set = depolarizing_kraus(2, 0.35);
  ComplexMatrix kraus_out = ComplexMatrix::Zero(4, 4);
  for (const ComplexMatrix& kraus : set.operators) {
    kraus_out += kraus * rho2.matrix() * kraus.adjoint();
  }
  const std::vector<int> support = {0, 1};
  EXPECT_LT(max_gap(kraus_out,
                    apply_local_depolarizing(rho2, 0.35, support).matrix()),
            1e-10);
}

TEST(ReverseProcess, NoiselessReverseUndoesForward) {
  auto rng = make_rng(38);
  const TrotterCircuit circ = build_trotter_circuit(build_tfim(2), 1.0, 2);
  const NoiseSpec noiseless = NoiseSpec::noiseless();
  const NoisyProcess forward = build_forward_process(circ, noiseless);
  const NoisyProcess reverse = build_reverse_process(circ, noiseless);
  for (int sample = 0; sample < 3; ++sample) {
    const DensityMatrix rho = random_density(2, rng);
    const DensityMatrix round_trip =
        apply_process(reverse, apply_process(forward, rho));
    EXPECT_LT(max_gap(round_trip.matrix(), rho.matrix()), 1e-9);
  }
}

TEST(ReverseProcess, FullGlobalNoiseDepolarizesEverything) {
  auto rng = make_rng(39);
  const TrotterCircuit circ = build_trotter_circuit(build_tfim(2), 0.5, 1);
  const NoisyProcess reverse =
      build_reverse_process(circ, NoiseSpec::global(1.0));
  const DensityMatrix out = apply_process(reverse, random_density(2, rng));
  EXPECT_LT(max_gap(out.matrix(), DensityMatrix::maximally_mixed(2).matrix()),
            1e-12);
}

TEST(DualState, NoiselessDualEqualsForwardOutput) {
  const TrotterCircuit circ = build_trotter_circuit(build_tfim(2), 1.0, 3);
  const DensityMatrix forward = run_noisy_trotter(
      circ, NoiseSpec::noiseless(), DensityMatrix::zero_state(2));
  const DensityMatrix dual = dual_state(circ, NoiseSpec::noiseless());
  EXPECT_LT(max_gap(forward.matrix(), dual.matrix()), 1e-9);
}

TEST(DualState, IdentityCircuitDualIsPhysical) {
  // Zero-time circuit: all gates are identities, only the noise acts.
  const TrotterCircuit circ = build_trotter_circuit(build_tfim(2), 0.0, 2);
  const DensityMatrix dual = dual_state(circ, NoiseSpec::local(0.1, 0.2));
  EXPECT_NO_THROW(dual.assert_physical());
}

TEST(DualState, MatchesKrausCompositionOracle) {
  // Oracle: the explicit Kraus list of the reverse process, composed step by
  // step, evaluated as sum_i K' rho0 K.
  const int n = 2;
  const TrotterCircuit circ = build_trotter_circuit(build_tfim(n), 0.8, 1);
  const NoiseSpec noise = NoiseSpec::local(0.05, 0.1);
  const NoisyProcess reverse = build_reverse_process(circ, noise);

  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  std::vector<ComplexMatrix> kraus_list = {ComplexMatrix::Identity(4, 4)};
  for (const ProcessStep& step : reverse.steps) {
    // Embed the gate.
    ComplexMatrix embedded;
    if (step.gate.support.size() == 2) {
      embedded = step.gate.unitary;  // n = 2: supports {0, 1} directly
    } else if (step.gate.support[0] == 0) {
      embedded = naive_kron(step.gate.unitary, id2);
    } else {
      embedded = naive_kron(id2, step.gate.unitary);
    }
    std::vector<ComplexMatrix> next;
    for (const ComplexMatrix& k : kraus_list) next.push_back(embedded * k);
    kraus_list = std::move(next);
    // Compose the step's noise Kraus set.
    const double rate = step.noise_rate;
    if (rate > 0.0) {
      const KrausSet noise_set =
          depolarizing_kraus(static_cast<int>(step.gate.support.size()), rate);
      std::vector<ComplexMatrix> with_noise;
      for (const ComplexMatrix& noise_k : noise_set.operators) {
        ComplexMatrix embedded_noise;
        if (step.gate.support.size() == 2) {
          embedded_noise = noise_k;
        } else if (step.gate.support[0] == 0) {
          embedded_noise = naive_kron(noise_k, id2);
        } else {
          embedded_noise = naive_kron(id2, noise_k);
        }
        for (const ComplexMatrix& k : kraus_list) {
          with_noise.push_back(embedded_noise * k);
        }
      }
      kraus_list = std::move(with_noise);
    }
  }
  const ComplexMatrix rho0 = DensityMatrix::zero_state(n).matrix();
  ComplexMatrix dual_oracle = ComplexMatrix::Zero(4, 4);
  for (const ComplexMatrix& k : kraus_list) {
    dual_oracle += k.adjoint() * rho0 * k;
  }

  const DensityMatrix dual = dual_state(circ, noise);
  EXPECT_LT(max_gap(dual.matrix(), dual_oracle), 1e-9);
}

TEST(DualState, ApproachesForwardStateWithDepth) {
  // Under stochastic Pauli noise the dual state tracks the noisy output
  // better as the circuit deepens.
  const Hamiltonian h = build_tfim(2);
  const NoiseSpec noise = NoiseSpec::local(0.002, 0.004);
  const DensityMatrix rho0 = DensityMatrix::zero_state(2);
  std::vector<double> gaps;
  for (int m : {2, 8, 32}) {
    const TrotterCircuit circ = build_trotter_circuit(h, 1.0, m);
    const DensityMatrix forward = run_noisy_trotter(circ, noise, rho0);
    gaps.push_back(trace_distance(forward, dual_state(circ, noise)));
  }
  EXPECT_LT(gaps[2], gaps[0]);
}

}  // namespace
}  // namespace qem
