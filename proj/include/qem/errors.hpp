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

#ifndef QEM_ERRORS_HPP_
#define QEM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qem {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QEM_DEFINE_ERROR(Name)                            \
  class Name : public Error {                             \
   public:                                                \
    explicit Name(const std::string& msg) : Error(msg) {} \
  }

// Linear algebra and state validation.
QEM_DEFINE_ERROR(DimensionMismatch);
QEM_DEFINE_ERROR(NonHermitianInput);
QEM_DEFINE_ERROR(NonHermitianObservable);
QEM_DEFINE_ERROR(InvalidState);
// A numeric quantity that should vanish (imaginary residue, coefficient-sum
// defect) exceeded its tolerance.
QEM_DEFINE_ERROR(ToleranceViolation);

// Model construction.
QEM_DEFINE_ERROR(InvalidQubitCount);
QEM_DEFINE_ERROR(InvalidTrotterNumber);
QEM_DEFINE_ERROR(InvalidRate);
QEM_DEFINE_ERROR(UnsupportedSupportSize);

// Estimators.
QEM_DEFINE_ERROR(DuplicateNode);
QEM_DEFINE_ERROR(SignMismatch);
QEM_DEFINE_ERROR(ZeroValue);
QEM_DEFINE_ERROR(InsufficientGrid);
QEM_DEFINE_ERROR(DegenerateLambdas);
QEM_DEFINE_ERROR(ZeroTrotter);
QEM_DEFINE_ERROR(LengthMismatch);
QEM_DEFINE_ERROR(DegenerateDenominator);

// Shot model.
QEM_DEFINE_ERROR(OutOfRange);
QEM_DEFINE_ERROR(InvalidShots);
QEM_DEFINE_ERROR(InsufficientShots);

// Harness.
QEM_DEFINE_ERROR(ConfigError);
QEM_DEFINE_ERROR(IoError);

// Precondition failures not covered by a named error above.
QEM_DEFINE_ERROR(InvalidArgument);

#undef QEM_DEFINE_ERROR

}  // namespace qem

#endif  // QEM_ERRORS_HPP_
