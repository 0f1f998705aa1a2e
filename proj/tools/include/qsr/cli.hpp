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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsr/attacks.hpp"
#include "qsr/protocol.hpp"
#include "qsr/serialize.hpp"

namespace qsr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAborted = 2;

struct AttackSpec {
    AttackScenario scenario;
};

struct QmssSpec {
    std::size_t w = 2;
    std::vector<std::uint64_t> randomizers;
    std::vector<Statevector> secrets;
};

/// Parsed and validated run configuration.
struct RunConfig {
    Json raw;
    ProtocolInput input;
    std::optional<AttackSpec> attack;
    std::optional<QmssSpec> qmss;
};

/// ConfigError (or the share-rule error) on anything malformed.
RunConfig parse_run_config(const Json& doc);

/// Runs the configured protocol and returns the transcript document.
/// Exit status goes to `status`.
Json execute(const RunConfig& config, int& status);

/// Entry point; all output goes to the given streams.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace qsr::cli
