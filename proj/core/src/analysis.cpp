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

#include "qsr/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qsr/error.hpp"
#include "qsr/rng.hpp"

namespace qsr {

void CostModel::validate() const {
    if (m == 0) {
        throw Error(ErrorKind::InvalidArity, "number of shared states must be at least 1");
    }
    if (n < 2) {
        throw Error(ErrorKind::InvalidArity, "need at least two reconstructing agents");
    }
    if (q_bits < 2) {
        throw Error(ErrorKind::InvalidArity, "shares need at least two bits");
    }
}

std::size_t share_bits(std::uint64_t q) { return static_cast<std::size_t>(std::bit_width(q)); }

double distribution_cost(const CostModel& model) {
    model.validate();
    return static_cast<double>(model.n) * static_cast<double>(model.q_bits) / static_cast<double>(model.m);
}

ComputationCost computation_cost(const CostModel& model) {
    model.validate();
    const auto n = static_cast<std::uint64_t>(model.n);
    const auto m = static_cast<std::uint64_t>(model.m);
    ComputationCost c;
    c.additions_per_state = n - 1;
    c.multiplications_per_angle = static_cast<double>(2 + m) / static_cast<double>(m);
    c.total_additions = (n - 1) * m;
    c.total_multiplications = (n + 1) * (2 + m);
    return c;
}

std::vector<CostRow> comparison_table(const CostModel& model) {
    model.validate();
    std::vector<CostRow> rows;
    rows.push_back({"proposed", "O(1)", "O(n)T_a+O(1)T_m", true, distribution_cost(model), computation_cost(model)});
    rows.push_back({"unrestricted", "O(|q|n^2)", "O(n)T_a+O(n^3)T_m", false, std::nullopt, std::nullopt});
    rows.push_back({"basic SSR", "O(|q|n)", "O(n)T_a+O(n^3)T_m", false, std::nullopt, std::nullopt});
    rows.push_back({"bivariate", "O(|q|n^2)", "O(n)T_a+O(n^4)T_m", false, std::nullopt, std::nullopt});
    return rows;
}

namespace {

void prep(Statevector& s, std::size_t q, double rz) {
    s.apply_1q(Gate::h(), q);
    s.apply_1q(Gate::rz(rz), q);
}

/// Runs the circuit up to the final measurement of q2.
Statevector experiment_until_c2(const OutcomePolicy& p0, const OutcomePolicy& p1, int& c0, int& c1) {
    Statevector s(3);
    prep(s, 0, kPi / 3.0);
    s.apply_1q(Gate::ry(kPi / 2.0), 0);
    prep(s, 1, kPi / 6.0);
    prep(s, 2, kPi);

    s.apply_1q(Gate::rx(2.0 * kPi / 3.0), 0);
    s.apply_cz(0, 1);
    s.apply_1q(Gate::h(), 0);
    c0 = s.measure(0, Basis::Z, p0).outcome;
    if (c0 == 1) {
        s.apply_1q(Gate::x(), 1);
    }
    s.apply_1q(Gate::h(), 1);
    s.apply_1q(Gate::rx(c0 == 1 ? kPi / 2.0 : kPi / 6.0), 1);

    s.apply_cz(1, 2);
    s.apply_1q(Gate::h(), 1);
    c1 = s.measure(1, Basis::Z, p1).outcome;
    if (c1 == 1) {
        s.apply_1q(Gate::x(), 2);
    }
    s.apply_1q(Gate::h(), 2);
    s.apply_1q(Gate::rx(c1 == 1 ? 5.0 * kPi / 3.0 : -kPi / 3.0), 2);
    s.apply_1q(Gate::rx(kPi / 3.0), 2);

    s.apply_1q(Gate::ry(-kPi / 2.0), 2);
    s.apply_1q(Gate::rz(-kPi / 3.0), 2);
    s.apply_1q(Gate::h(), 2);
    return s;
}

} // namespace

Histogram run_experiment(std::size_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorKind::InvalidArity, "need at least one shot");
    }
    Histogram counts;
    for (std::size_t k = 0; k < shots; ++k) {
        const std::uint64_t shot_seed = derive_seed(seed, k);
        int c0 = 0;
        int c1 = 0;
        Statevector s = experiment_until_c2(Sample{derive_seed(shot_seed, "c0")}, Sample{derive_seed(shot_seed, "c1")},
                                            c0, c1);
        const int c2 = s.measure(2, Basis::Z, Sample{derive_seed(shot_seed, "c2")}).outcome;
        std::string key{static_cast<char>('0' + c2), static_cast<char>('0' + c1), static_cast<char>('0' + c0)};
        ++counts[key];
    }
    return counts;
}

double experiment_c2_leak() {
    double worst = 0.0;
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            int c0 = 0;
            int c1 = 0;
            const Statevector s = experiment_until_c2(Forced{b0}, Forced{b1}, c0, c1);
            worst = std::max(worst, std::sqrt(s.probability(2, Basis::Z, 1)));
        }
    }
    return worst;
}

namespace {

Statevector swap_register(const Statevector& a, const Statevector& b) {
    if (a.num_qubits() != 1 || b.num_qubits() != 1) {
        throw Error(ErrorKind::DimensionError, "swap test compares single-qubit states");
    }
    const Statevector factors[] = {basis_state(Basis::Z, 0), a, b};
    Statevector s = Statevector::product(factors);
    s.apply_1q(Gate::h(), 0);
    s.apply_controlled_swap(0, 1, 2);
    s.apply_1q(Gate::h(), 0);
    return s;
}

} // namespace

double swap_test_probability(const Statevector& a, const Statevector& b) {
    return swap_register(a, b).probability(0, Basis::Z, 0);
}

double swap_test_p0(const Statevector& a, const Statevector& b, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorKind::InvalidArity, "need at least one shot");
    }
    const Statevector reg = swap_register(a, b);
    Rng rng(seed);
    std::size_t zeros = 0;
    for (std::size_t k = 0; k < shots; ++k) {
        Statevector copy = reg;
        if (copy.measure(0, Basis::Z, Sample{rng.next()}).outcome == 0) {
            ++zeros;
        }
    }
    return static_cast<double>(zeros) / static_cast<double>(shots);
}

double swap_test_verify(const Statevector& a, const Statevector& b, std::size_t shots, std::uint64_t seed) {
    return std::clamp(2.0 * swap_test_p0(a, b, shots, seed) - 1.0, 0.0, 1.0);
}

} // namespace qsr
