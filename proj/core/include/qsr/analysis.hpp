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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsr/statevec.hpp"

namespace qsr {

/// n counts the reconstructing agents (n-1 shareholders plus the combiner);
/// the dealer is one more party.
struct CostModel {
    std::size_t n = 2;
    std::size_t m = 1;
    std::size_t q_bits = 2;

    void validate() const;
};

/// Bits of |q| needed for modulus q.
std::size_t share_bits(std::uint64_t q);

/// n|q|/m bits per shared state.
double distribution_cost(const CostModel& model);

struct ComputationCost {
    /// Additions per shared state: one per shareholder angle.
    std::uint64_t additions_per_state = 0;
    /// Multiplications per party angle per shared state, (2+m)/m.
    double multiplications_per_angle = 0.0;
    /// Totals over all m states.
    std::uint64_t total_additions = 0;
    std::uint64_t total_multiplications = 0;
};

ComputationCost computation_cost(const CostModel& model);

struct CostRow {
    std::string scheme;
    std::string distribution_class;
    std::string computation_class;
    bool share_reuse = false;
    /// Only the proposed scheme carries exact numbers.
    std::optional<double> distribution_bits;
    std::optional<ComputationCost> computation;
};

std::vector<CostRow> comparison_table(const CostModel& model);

/// Counts keyed "c2c1c0".
using Histogram = std::map<std::string, std::size_t>;

Histogram run_experiment(std::size_t shots, std::uint64_t seed);

/// Largest |amplitude| of the c2 = 1 branch just before the last measurement,
/// over all four (c0, c1) branches.
double experiment_c2_leak();

/// Exact P(ancilla = 0) of the swap test on single-qubit a and b.
double swap_test_probability(const Statevector& a, const Statevector& b);

/// Fraction of `shots` swap-test runs with ancilla 0.
double swap_test_p0(const Statevector& a, const Statevector& b, std::size_t shots, std::uint64_t seed);

/// 2 P(0) - 1 estimated from `shots` runs, clipped to [0, 1].
double swap_test_verify(const Statevector& a, const Statevector& b, std::size_t shots, std::uint64_t seed);

} // namespace qsr
