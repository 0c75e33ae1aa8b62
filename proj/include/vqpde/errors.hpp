// Copyright 2026 The vqpde Authors
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

namespace vqpde {

/// Input vector is degenerate (e.g. all-zero where a direction is required).
class DegenerateInputError : public std::invalid_argument {
  public:
    explicit DegenerateInputError(const std::string &msg)
        : std::invalid_argument(msg) {}
};

/// The variational cost is undefined because <psi|A|psi> is not positive.
class SingularCostError : public std::runtime_error {
  public:
    explicit SingularCostError(const std::string &msg)
        : std::runtime_error(msg) {}
};

/// An explicit scheme was requested outside its stability region.
class StabilityError : public std::runtime_error {
  public:
    explicit StabilityError(const std::string &msg)
        : std::runtime_error(msg) {}
};

/// Dense factorization failed (singular matrix).
class FactorizationError : public std::runtime_error {
  public:
    explicit FactorizationError(const std::string &msg)
        : std::runtime_error(msg) {}
};

/// An operation was called in an invalid sequence (missing prior state).
class StateError : public std::logic_error {
  public:
    explicit StateError(const std::string &msg) : std::logic_error(msg) {}
};

} // namespace vqpde
