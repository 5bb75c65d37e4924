// Copyright 2026 The rac-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RACLAB_ERRORS_H
#define RACLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace raclab {

/// Base of every error caused by inputs that violate a mathematical
/// precondition. The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : DomainError {
    using DomainError::DomainError;
};

/// Bloch vector outside the ball, or a two-qubit operator that is not a
/// density matrix.
struct InvalidState : DomainError {
    using DomainError::DomainError;
};

/// Conditioning on a measurement outcome of (numerically) zero probability.
struct NullEventError : DomainError {
    using DomainError::DomainError;
};

/// A protocol needs a correlation component that is (numerically) zero.
struct DegenerateState : DomainError {
    using DomainError::DomainError;
};

/// Malformed configuration or serialized input. Exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be read or written. Exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace raclab

#endif
