// Copyright 2026 The qsr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsr {

enum class ErrorKind {
    InvalidArity,
    IndexError,
    ArityError,
    ImpossibleOutcome,
    DimensionError,
    BadModulus,
    BadRandomizer,
    NotConsistent,
    DegenerateInterpolation,
    ProtocolViolation,
    ChannelError,
    ConfigError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArity: return "InvalidArity";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::ImpossibleOutcome: return "ImpossibleOutcome";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::BadRandomizer: return "BadRandomizer";
    case ErrorKind::NotConsistent: return "NotConsistent";
    case ErrorKind::DegenerateInterpolation: return "DegenerateInterpolation";
    case ErrorKind::ProtocolViolation: return "ProtocolViolation";
    case ErrorKind::ChannelError: return "ChannelError";
    case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

/// Every failure raised by the library. what() is "<Kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qsr
