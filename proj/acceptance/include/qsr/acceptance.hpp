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
#include <ostream>
#include <string>
#include <vector>

namespace qsr::acceptance {

enum class Fault { None, SignFlip };

struct Options {
    std::uint64_t seed = 20260417;
    /// Swaps in a deliberately broken response rule to prove the suite bites.
    Fault fault = Fault::None;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CriterionResult> run_all(const Options& options);

/// One "[PASS]"/"[FAIL]" line per criterion plus a summary; returns true iff all pass.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace qsr::acceptance
