// Copyright 2026 The exwit authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace exwit {

// Malformed shapes, lengths, or incomplete inputs.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a mathematical precondition (non-Hermitian, non-unit trace, ...).
class ContractViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Simulation would exceed the dense-matrix qubit cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Closed forms exist only for a subset of parameters.
class CapabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace exwit
