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

#include "qem/trotter.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "qem/errors.hpp"

namespace qem {

namespace {

// Bit position (from the least significant bit) of a qubit index; qubit 0 is
// the most significant tensor factor.
inline int bit_position(int qubit, int n_qubits) {
  return n_qubits - 1 - qubit;
}

// Inserts zero bits at the given ascending positions, enumerating the indices
// whose support bits are all zero.
inline Eigen::Index expand_index(Eigen::Index packed,
                                 std::span<const int> ascending_positions) {
  Eigen::Index out = packed;
  for (int p : ascending_positions) {
    const Eigen::Index low = out & ((Eigen::Index{1} << p) - 1);
    out = ((out >> p) << (p + 1)) | low;
  }
  return out;
}

struct SupportLayout {
  int k = 0;                       // support size
  Eigen::Index g = 1;              // 2^k
  std::array<int, 2> positions{};  // ascending bit positions (k <= 2)
  std::array<Eigen::Index, 4> offsets{};  // gate index -> embedded offset

  SupportLayout(std::span<const int> support, int n_qubits) {
    k = static_cast<int>(support.size());
    if (k < 1 || k > 2) {
      throw UnsupportedSupportSize("gate support size must be 1 or 2");
    }
    g = Eigen::Index{1} << k;
    for (int j = 0; j < k; ++j) {
      const int q = support[static_cast<std::size_t>(j)];
      if (q < 0 || q >= n_qubits) {
        throw InvalidArgument("gate support qubit out of range");
      }
    }
    if (k == 2 && support[0] == support[1]) {
      throw InvalidArgument("gate support qubits must be distinct");
    }
    // support[0] is the most significant gate bit.
    for (Eigen::Index s = 0; s < g; ++s) {
      Eigen::Index off = 0;
      for (int j = 0; j < k; ++j) {
        if ((s >> (k - 1 - j)) & 1) {
          off |= Eigen::Index{1}
                 << bit_position(support[static_cast<std::size_t>(j)], n_qubits);
        }
      }
      offsets[static_cast<std::size_t>(s)] = off;
    }
    std::array<int, 2> pos{};
    for (int j = 0; j < k; ++j) {
      pos[static_cast<std::size_t>(j)] =
          bit_position(support[static_cast<std::size_t>(j)], n_qubits);
    }
    std::sort(pos.begin(), pos.begin() + k);
    positions = pos;
  }

  std::span<const int> ascending_positions() const {
    return {positions.data(), static_cast<std::size_t>(k)};
  }
};

}  // namespace

void apply_gate_inplace(ComplexMatrix& rho, const ComplexMatrix& u,
                        std::span<const int> support, int n_qubits) {
  const Eigen::Index d = rho.rows();
  const SupportLayout layout(support, n_qubits);
  const Eigen::Index g = layout.g;
  if (u.rows() != g || u.cols() != g) {
    throw DimensionMismatch("apply_gate_inplace: gate dimension mismatch");
  }
  const Eigen::Index outer_count = d >> layout.k;
  Complex* data = rho.data();

  // Left factor: rho <- U_emb rho. For each outer index the g affected rows
  // are combined; the inner loop runs over contiguous row storage.
  std::vector<Complex> scratch(static_cast<std::size_t>(g) *
                               static_cast<std::size_t>(d));
  for (Eigen::Index o = 0; o < outer_count; ++o) {
    const Eigen::Index base = expand_index(o, layout.ascending_positions());
    std::array<Complex*, 4> rows{};
    for (Eigen::Index s = 0; s < g; ++s) {
      rows[static_cast<std::size_t>(s)] =
          data + (base + layout.offsets[static_cast<std::size_t>(s)]) * d;
    }
    for (Eigen::Index s = 0; s < g; ++s) {
      Complex* out = scratch.data() + s * d;
      const Complex u0 = u(s, 0);
      const Complex* r0 = rows[0];
      for (Eigen::Index c = 0; c < d; ++c) out[c] = u0 * r0[c];
      for (Eigen::Index s2 = 1; s2 < g; ++s2) {
        const Complex us = u(s, s2);
        const Complex* r = rows[static_cast<std::size_t>(s2)];
        for (Eigen::Index c = 0; c < d; ++c) out[c] += us * r[c];
      }
    }
    for (Eigen::Index s = 0; s < g; ++s) {
      std::copy(scratch.data() + s * d, scratch.data() + (s + 1) * d,
                rows[static_cast<std::size_t>(s)]);
    }
  }

  // Right factor: rho <- rho U_emb'. (rho U')(r, c) = sum_c' rho(r, c')
  // conj(U(c, c')); gathers stay within one contiguous row.
  for (Eigen::Index r = 0; r < d; ++r) {
    Complex* row = data + r * d;
    for (Eigen::Index o = 0; o < outer_count; ++o) {
      const Eigen::Index base = expand_index(o, layout.ascending_positions());
      std::array<Complex, 4> x{};
      for (Eigen::Index s = 0; s < g; ++s) {
        x[static_cast<std::size_t>(s)] =
            row[base + layout.offsets[static_cast<std::size_t>(s)]];
      }
      for (Eigen::Index s = 0; s < g; ++s) {
        Complex acc = 0.0;
        for (Eigen::Index s2 = 0; s2 < g; ++s2) {
          acc += x[static_cast<std::size_t>(s2)] * std::conj(u(s, s2));
        }
        row[base + layout.offsets[static_cast<std::size_t>(s)]] = acc;
      }
    }
  }
}

TrotterCircuit build_trotter_circuit(const Hamiltonian& h, double t, int m,
                                     LayerOrder order) {
  if (m < 1) throw InvalidTrotterNumber("build_trotter_circuit: M must be >= 1");
  h.validate();

  TrotterCircuit circ;
  circ.n_qubits = h.n_qubits;
  circ.trotter_number = m;
  circ.total_time = t;

  // One step's gate sequence; repeated M times.
  std::vector<Gate> step;
  std::vector<std::size_t> layer_order(h.layers.size());
  for (std::size_t i = 0; i < h.layers.size(); ++i) layer_order[i] = i;
  if (order == LayerOrder::XThenZz) {
    std::reverse(layer_order.begin(), layer_order.end());
  }
  const double dt = t / static_cast<double>(m);
  for (std::size_t li : layer_order) {
    for (std::size_t ti : h.layers[li]) {
      const PauliString& term = h.terms[ti];
      Gate gate;
      gate.support = term.support();
      if (gate.support.empty()) {
        // Identity term: a global phase on qubit 0, kept so the gate count
        // stays M x (terms per layer summed).
        gate.support = {0};
        gate.unitary = std::exp(Complex(0.0, -dt * term.coefficient())) *
                       identity_matrix(2);
      } else {
        const PauliString restricted = term.restricted_to_support();
        gate.unitary = matexp_hermitian(
            pauli_to_matrix(restricted.with_coefficient(1.0)),
            Complex(0.0, -dt * term.coefficient()));
      }
      step.push_back(std::move(gate));
    }
  }
  circ.gates_per_step = step.size();
  circ.gates.reserve(step.size() * static_cast<std::size_t>(m));
  for (int rep = 0; rep < m; ++rep) {
    for (const Gate& gate : step) circ.gates.push_back(gate);
  }
  return circ;
}

DensityMatrix run_noisy_trotter(const TrotterCircuit& circ,
                                const NoiseSpec& noise,
                                const DensityMatrix& rho0) {
  noise.validate();
  if (rho0.n_qubits() != circ.n_qubits) {
    throw DimensionMismatch("run_noisy_trotter: qubit-count mismatch");
  }
  ComplexMatrix rho = rho0.matrix();
  std::size_t in_step = 0;
  for (const Gate& gate : circ.gates) {
    apply_gate_inplace(rho, gate.unitary, gate.support, circ.n_qubits);
    if (noise.mode == NoiseMode::Local) {
      const double p = noise.local_rate_for_support(gate.support.size());
      if (p > 0.0) {
        apply_local_depolarizing_inplace(rho, p, gate.support, circ.n_qubits);
      }
    }
    if (++in_step == circ.gates_per_step) {
      in_step = 0;
      if (noise.mode == NoiseMode::Global) {
        apply_global_depolarizing_inplace(rho, noise.p_global);
      }
    }
  }
  return DensityMatrix(std::move(rho));
}

ComplexMatrix circuit_unitary(const TrotterCircuit& circ) {
  const Eigen::Index d = Eigen::Index{1} << circ.n_qubits;
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  for (const Gate& gate : circ.gates) {
    const SupportLayout layout(gate.support, circ.n_qubits);
    ComplexMatrix embedded = ComplexMatrix::Zero(d, d);
    const Eigen::Index outer_count = d >> layout.k;
    for (Eigen::Index o = 0; o < outer_count; ++o) {
      const Eigen::Index base = expand_index(o, layout.ascending_positions());
      for (Eigen::Index sr = 0; sr < layout.g; ++sr) {
        for (Eigen::Index sc = 0; sc < layout.g; ++sc) {
          embedded(base + layout.offsets[static_cast<std::size_t>(sr)],
                   base + layout.offsets[static_cast<std::size_t>(sc)]) =
              gate.unitary(sr, sc);
        }
      }
    }
    u = embedded * u;
  }
  return u;
}

}  // namespace qem
