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

#include "qem/pauli.hpp"

#include <bit>

#include "qem/errors.hpp"

namespace qem {

namespace {

constexpr Complex kImaginaryPowers[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

PauliString::PauliString(std::string letters, double coefficient)
    : letters_(std::move(letters)), coefficient_(coefficient) {
  if (letters_.empty()) {
    throw InvalidArgument("PauliString: letters must be non-empty");
  }
  if (letters_.size() > 62) {
    throw InvalidArgument("PauliString: more than 62 qubits unsupported");
  }
  const int n = static_cast<int>(letters_.size());
  for (int site = 0; site < n; ++site) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - site);
    switch (letters_[site]) {
      case 'I':
        break;
      case 'X':
        x_mask_ |= bit;
        break;
      case 'Y':
        x_mask_ |= bit;
        yz_mask_ |= bit;
        ++y_count_;
        break;
      case 'Z':
        yz_mask_ |= bit;
        break;
      default:
        throw InvalidArgument(std::string("PauliString: invalid letter '") +
                              letters_[site] + "'");
    }
  }
}

PauliString PauliString::single(int n_qubits, char letter, int site,
                                double coefficient) {
  if (n_qubits < 1 || site < 0 || site >= n_qubits) {
    throw InvalidArgument("PauliString::single: site out of range");
  }
  std::string letters(static_cast<std::size_t>(n_qubits), 'I');
  letters[static_cast<std::size_t>(site)] = letter;
  return PauliString(std::move(letters), coefficient);
}

std::vector<int> PauliString::support() const {
  std::vector<int> sites;
  for (int site = 0; site < n_qubits(); ++site) {
    if (letters_[static_cast<std::size_t>(site)] != 'I') sites.push_back(site);
  }
  return sites;
}

PauliString PauliString::restricted_to_support() const {
  std::string restricted;
  for (char l : letters_) {
    if (l != 'I') restricted.push_back(l);
  }
  if (restricted.empty()) restricted = "I";
  return PauliString(std::move(restricted), coefficient_);
}

Complex PauliString::phase(std::uint64_t col) const {
  const int minus = std::popcount(col & yz_mask_) & 1;
  Complex p = kImaginaryPowers[y_count_ & 3];
  return minus ? -p : p;
}

ComplexMatrix pauli_to_matrix(const PauliString& p) {
  const Eigen::Index d = p.dim();
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    const auto c = static_cast<std::uint64_t>(col);
    m(static_cast<Eigen::Index>(p.permuted_index(c)), col) =
        p.coefficient() * p.phase(c);
  }
  return m;
}

Complex trace_pauli(const ComplexMatrix& a, const PauliString& p) {
  if (a.rows() != p.dim() || a.cols() != p.dim()) {
    throw DimensionMismatch("trace_pauli: dimension mismatch");
  }
  // Tr(A P) = sum_col A(col, m(col)) P(m(col), col) with one entry per column.
  Complex sum = 0.0;
  const Eigen::Index d = a.rows();
  for (Eigen::Index col = 0; col < d; ++col) {
    const auto c = static_cast<std::uint64_t>(col);
    sum += a(col, static_cast<Eigen::Index>(p.permuted_index(c))) * p.phase(c);
  }
  return p.coefficient() * sum;
}

Complex trace_product_pauli(const ComplexMatrix& a, const ComplexMatrix& b,
                            const PauliString& p) {
  const Eigen::Index d = p.dim();
  if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
    throw DimensionMismatch("trace_product_pauli: dimension mismatch");
  }
  // Tr(A B P) = sum_r phase(r) A.row(r) . B.col(m(r)), no conjugation.
  Complex sum = 0.0;
  for (Eigen::Index r = 0; r < d; ++r) {
    const auto rr = static_cast<std::uint64_t>(r);
    const Eigen::Index m = static_cast<Eigen::Index>(p.permuted_index(rr));
    sum += p.phase(rr) * (a.row(r) * b.col(m)).value();
  }
  return p.coefficient() * sum;
}

}  // namespace qem
