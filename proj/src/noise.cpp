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

#include "qem/noise.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qem/errors.hpp"

namespace qem {

namespace {

void check_rate(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidRate(std::string(what) + " rate " + std::to_string(p) +
                      " outside [0, 1]");
  }
}

inline int bit_position(int qubit, int n_qubits) {
  return n_qubits - 1 - qubit;
}

inline Eigen::Index expand_index(Eigen::Index packed,
                                 std::span<const int> ascending_positions) {
  Eigen::Index out = packed;
  for (int p : ascending_positions) {
    const Eigen::Index low = out & ((Eigen::Index{1} << p) - 1);
    out = ((out >> p) << (p + 1)) | low;
  }
  return out;
}

}  // namespace

NoiseSpec NoiseSpec::global(double p_global) {
  NoiseSpec spec;
  spec.mode = NoiseMode::Global;
  spec.p_global = p_global;
  spec.validate();
  return spec;
}

NoiseSpec NoiseSpec::local(double p1, double p2) {
  NoiseSpec spec;
  spec.mode = NoiseMode::Local;
  spec.p1 = p1;
  spec.p2 = p2;
  spec.validate();
  return spec;
}

double NoiseSpec::local_rate_for_support(std::size_t support_size) const {
  switch (support_size) {
    case 1:
      return p1;
    case 2:
      return p2;
    default:
      throw UnsupportedSupportSize("no local rate for support size " +
                                   std::to_string(support_size));
  }
}

bool NoiseSpec::is_noiseless() const {
  return mode == NoiseMode::Global ? p_global == 0.0
                                   : (p1 == 0.0 && p2 == 0.0);
}

void NoiseSpec::validate() const {
  if (mode == NoiseMode::Global) {
    check_rate(p_global, "global");
  } else {
    check_rate(p1, "single-qubit");
    check_rate(p2, "two-qubit");
  }
}

void apply_global_depolarizing_inplace(ComplexMatrix& rho, double p) {
  check_rate(p, "global depolarizing");
  const Eigen::Index d = rho.rows();
  rho *= Complex(1.0 - p, 0.0);
  const Complex mix(p / static_cast<double>(d), 0.0);
  for (Eigen::Index i = 0; i < d; ++i) rho(i, i) += mix;
}

DensityMatrix apply_global_depolarizing(const DensityMatrix& rho, double p) {
  ComplexMatrix out = rho.matrix();
  apply_global_depolarizing_inplace(out, p);
  return DensityMatrix::unchecked(std::move(out));
}

void apply_local_depolarizing_inplace(ComplexMatrix& rho, double p,
                                      std::span<const int> support,
                                      int n_qubits) {
  check_rate(p, "local depolarizing");
  const int k = static_cast<int>(support.size());
  if (k < 1 || k > 2) {
    throw UnsupportedSupportSize("local depolarizing support size " +
                                 std::to_string(k));
  }
  std::vector<int> positions;
  positions.reserve(support.size());
  for (int q : support) {
    if (q < 0 || q >= n_qubits) {
      throw InvalidArgument("local depolarizing support qubit out of range");
    }
    positions.push_back(bit_position(q, n_qubits));
  }
  std::sort(positions.begin(), positions.end());
  if (k == 2 && positions[0] == positions[1]) {
    throw InvalidArgument("local depolarizing support qubits must be distinct");
  }

  const Eigen::Index d = rho.rows();
  const Eigen::Index g = Eigen::Index{1} << k;
  const Eigen::Index outer_count = d >> k;
  std::vector<Eigen::Index> offsets(static_cast<std::size_t>(g), 0);
  for (Eigen::Index s = 0; s < g; ++s) {
    for (int j = 0; j < k; ++j) {
      if ((s >> j) & 1) {
        offsets[static_cast<std::size_t>(s)] |=
            Eigen::Index{1} << positions[static_cast<std::size_t>(j)];
      }
    }
  }

  // Per outer block: B <- (1-p) B + p (Tr B / 2^k) I on the support block.
  const double mix = p / static_cast<double>(g);
  for (Eigen::Index orow = 0; orow < outer_count; ++orow) {
    const Eigen::Index base_r = expand_index(orow, positions);
    for (Eigen::Index ocol = 0; ocol < outer_count; ++ocol) {
      const Eigen::Index base_c = expand_index(ocol, positions);
      Complex block_tr = 0.0;
      for (Eigen::Index s = 0; s < g; ++s) {
        block_tr += rho(base_r + offsets[static_cast<std::size_t>(s)],
                        base_c + offsets[static_cast<std::size_t>(s)]);
      }
      const Complex add = mix * block_tr;
      for (Eigen::Index sr = 0; sr < g; ++sr) {
        for (Eigen::Index sc = 0; sc < g; ++sc) {
          Complex& entry = rho(base_r + offsets[static_cast<std::size_t>(sr)],
                               base_c + offsets[static_cast<std::size_t>(sc)]);
          entry *= (1.0 - p);
          if (sr == sc) entry += add;
        }
      }
    }
  }
}

DensityMatrix apply_local_depolarizing(const DensityMatrix& rho, double p,
                                       std::span<const int> support) {
  ComplexMatrix out = rho.matrix();
  apply_local_depolarizing_inplace(out, p, support, rho.n_qubits());
  return DensityMatrix::unchecked(std::move(out));
}

double local_to_global_rate(int n, double p_local) {
  if (n < 1) throw InvalidQubitCount("local_to_global_rate: n < 1");
  check_rate(p_local, "local");
  return std::min(static_cast<double>(n) * p_local, 1.0);
}

double KrausSet::completeness_gap() const {
  if (operators.empty()) return 1.0;
  const Eigen::Index d = operators.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : operators) sum += k.adjoint() * k;
  return (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

KrausSet depolarizing_kraus(int k_qubits, double p) {
  check_rate(p, "depolarizing");
  if (k_qubits < 1 || k_qubits > 2) {
    throw UnsupportedSupportSize("depolarizing Kraus support size " +
                                 std::to_string(k_qubits));
  }
  const double n_words = std::pow(4.0, k_qubits);
  KrausSet set;
  const char kLetters[] = {'I', 'X', 'Y', 'Z'};
  for (int word = 0; word < static_cast<int>(n_words); ++word) {
    std::string letters;
    int w = word;
    for (int j = 0; j < k_qubits; ++j) {
      letters.push_back(kLetters[w & 3]);
      w >>= 2;
    }
    const double weight =
        word == 0 ? 1.0 - p + p / n_words : p / n_words;
    if (weight == 0.0) continue;
    set.operators.push_back(std::sqrt(weight) *
                            pauli_to_matrix(PauliString(letters)));
  }
  return set;
}

}  // namespace qem
