// Copyright 2026 The mumeb Authors
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
#include <string_view>

namespace mumeb {

enum class ErrorKind {
    UnsupportedDegree,
    InvalidPolynomial,
    DomainMismatch,
    DivisionByZero,
    LiftFailed,
    InvariantViolation,
    MixedParity,
    InvalidMatrix,
    DimensionMismatch,
    InvalidGenerator,
    EmptySet,
    EnumerationTooLarge,
    InvalidConfig,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnsupportedDegree:
            return "UnsupportedDegree";
        case ErrorKind::InvalidPolynomial:
            return "InvalidPolynomial";
        case ErrorKind::DomainMismatch:
            return "DomainMismatch";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::LiftFailed:
            return "LiftFailed";
        case ErrorKind::InvariantViolation:
            return "InvariantViolation";
        case ErrorKind::MixedParity:
            return "MixedParity";
        case ErrorKind::InvalidMatrix:
            return "InvalidMatrix";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::InvalidGenerator:
            return "InvalidGenerator";
        case ErrorKind::EmptySet:
            return "EmptySet";
        case ErrorKind::EnumerationTooLarge:
            return "EnumerationTooLarge";
        case ErrorKind::InvalidConfig:
            return "InvalidConfig";
    }
    return "Unknown";
}

}  // namespace mumeb
