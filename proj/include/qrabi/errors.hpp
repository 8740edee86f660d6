// Copyright 2026 The qrabi Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qrabi {

// Parameter outside the domain an operation accepts.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// alpha == 0: every closed form divides by the anharmonicity.
class DegenerateParameterError : public DomainError {
public:
    using DomainError::DomainError;
};

// A mathematical invariant that must hold by construction was violated.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A numerical procedure did not reach its accuracy target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResolutionError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

class BoxTooSmallError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

class NoOscillationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularFitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qrabi
