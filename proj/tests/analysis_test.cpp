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

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "qsr/analysis.hpp"
#include "qsr/error.hpp"
#include "qsr/protocol.hpp"
#include "qsr/rng.hpp"

namespace {

using namespace qsr;

TEST(Cost, ShareBits) {
    EXPECT_EQ(share_bits(3), 2u);
    EXPECT_EQ(share_bits(5), 3u);
    EXPECT_EQ(share_bits(101), 7u);
}

TEST(Cost, DistributionBits) {
    EXPECT_DOUBLE_EQ(distribution_cost({3, 1, 2}), 6.0);
    EXPECT_DOUBLE_EQ(distribution_cost({3, 6, 2}), 1.0);
    EXPECT_LT(distribution_cost({10, 1000000, 64}), 1e-2);
}

TEST(Cost, ComputationSingleState) {
    const auto c = computation_cost({3, 1, 2});
    EXPECT_EQ(c.additions_per_state, 2u);
    EXPECT_DOUBLE_EQ(c.multiplications_per_angle, 3.0);
    EXPECT_EQ(c.total_additions, 2u);
    EXPECT_EQ(c.total_multiplications, 12u);
}

TEST(Cost, ComputationAmortizes) {
    const auto c = computation_cost({5, 4, 8});
    EXPECT_EQ(c.total_additions, 16u);
    EXPECT_EQ(c.total_multiplications, 36u);
    EXPECT_DOUBLE_EQ(c.multiplications_per_angle, 1.5);
    EXPECT_NEAR(computation_cost({5, 1000000, 8}).multiplications_per_angle, 1.0, 1e-5);
}

TEST(Cost, MatchesProtocolCounters) {
    MultiSecretInput in;
    in.shares = split_secret(2, 5, 11, 1);
    for (std::uint64_t j = 0; j < 4; ++j) {
        in.secrets.push_back(Statevector(1));
        in.randomizers.push_back(j + 1);
        in.seeds.push_back(j);
    }
    std::uint64_t mul = 0;
    std::uint64_t add = 0;
    for (const auto& t : run_multi_secret(in)) {
        mul += t.counters.multiplications;
        add += t.counters.additions;
    }
    const auto c = computation_cost({5, 4, share_bits(11)});
    EXPECT_EQ(mul, c.total_multiplications);
    EXPECT_EQ(add, c.total_additions);
}

TEST(Cost, InvalidModels) {
    for (CostModel m : {CostModel{3, 0, 2}, CostModel{1, 1, 2}, CostModel{3, 1, 1}}) {
        try {
            m.validate();
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidArity);
        }
    }
}

TEST(Cost, ComparisonTable) {
    const auto rows = comparison_table({3, 1, 2});
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].scheme, "proposed");
    EXPECT_EQ(rows[0].distribution_class, "O(1)");
    EXPECT_TRUE(rows[0].share_reuse);
    ASSERT_TRUE(rows[0].distribution_bits.has_value());
    EXPECT_DOUBLE_EQ(*rows[0].distribution_bits, 6.0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_FALSE(rows[i].share_reuse);
        EXPECT_FALSE(rows[i].distribution_bits.has_value());
    }
    EXPECT_EQ(rows[3].computation_class, "O(n)T_a+O(n^4)T_m");
}

TEST(Experiment, SameSeedSameHistogram) {
    EXPECT_EQ(run_experiment(2000, 7), run_experiment(2000, 7));
}

TEST(Experiment, LastBitAlwaysZeroAndMarginalsUniform) {
    const auto h = run_experiment(20000, 11);
    std::size_t total = 0;
    std::size_t c0 = 0;
    std::size_t c1 = 0;
    for (const auto& [key, count] : h) {
        ASSERT_EQ(key.size(), 3u);
        EXPECT_EQ(key[0], '0') << key;
        total += count;
        c0 += key[2] == '1' ? count : 0;
        c1 += key[1] == '1' ? count : 0;
    }
    EXPECT_EQ(total, 20000u);
    const double sigma = std::sqrt(0.25 / 20000.0);
    EXPECT_NEAR(c0 / 20000.0, 0.5, 4 * sigma);
    EXPECT_NEAR(c1 / 20000.0, 0.5, 4 * sigma);
}

TEST(Experiment, NoLeakIntoLastBit) { EXPECT_LT(experiment_c2_leak(), 1e-7); }

TEST(SwapTest, ExactProbabilities) {
    EXPECT_NEAR(swap_test_probability(basis_state(Basis::Z, 0), basis_state(Basis::Z, 0)), 1.0, 1e-12);
    EXPECT_NEAR(swap_test_probability(basis_state(Basis::Z, 0), basis_state(Basis::Z, 1)), 0.5, 1e-12);
    EXPECT_NEAR(swap_test_probability(basis_state(Basis::Z, 0), basis_state(Basis::X, 0)), 0.75, 1e-12);
}

TEST(SwapTest, MatchesFidelityFormula) {
    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        Statevector a(1);
        a.apply_1q(Gate::ry(rng.uniform() * kPi), 0);
        a.apply_1q(Gate::rz(rng.uniform() * kTwoPi), 0);
        Statevector b(1);
        b.apply_1q(Gate::ry(rng.uniform() * kPi), 0);
        b.apply_1q(Gate::rz(rng.uniform() * kTwoPi), 0);
        EXPECT_NEAR(swap_test_probability(a, b), 0.5 + 0.5 * fidelity_up_to_phase(a, b), 1e-12);
    }
}

TEST(SwapTest, SampledEstimateIsUnbiased) {
    const auto a = basis_state(Basis::Z, 0);
    const auto b = basis_state(Basis::X, 0);
    const std::size_t shots = 20000;
    const double sigma = std::sqrt(0.75 * 0.25 / shots);
    EXPECT_NEAR(swap_test_p0(a, b, shots, 3), 0.75, 4 * sigma);
    EXPECT_NEAR(swap_test_verify(a, b, shots, 3), 0.5, 8 * sigma);
    EXPECT_EQ(swap_test_verify(a, basis_state(Basis::Z, 1), 1, 1), 0.0);
}

TEST(SwapTest, RecoveredStatePasses) {
    ProtocolInput in;
    in.shares = complete_shares(2, {1, 2}, 3, 1);
    in.secret = Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0});
    in.forced_outcomes = {0, 1};
    in.masks = {kPi / 6.0, kPi};
    const auto t = run_protocol(in);
    ASSERT_TRUE(t.recovered.has_value());
    EXPECT_NEAR(swap_test_probability(*t.recovered, in.secret), 1.0, 1e-9);
    EXPECT_EQ(swap_test_p0(*t.recovered, in.secret, 1000, 4), 1.0);
}

} // namespace
