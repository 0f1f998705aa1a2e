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
#include "qsr/attacks.hpp"
#include "qsr/error.hpp"
#include "qsr/protocol.hpp"
#include "qsr/rng.hpp"

namespace {

using namespace qsr;

Statevector example_secret() { return Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0}); }

// Pure-state trace distance sqrt(1 - |<a|b>|^2).
double oracle_trace_distance(double a, double b) {
    return std::sqrt(1.0 - oracle::fidelity(oracle::plus_phi(a), oracle::plus_phi(b)));
}

TEST(Helstrom, ThirdTurnPair) {
    const auto d = helstrom_distinguishability(kPi / 3.0, 2.0 * kPi / 3.0);
    EXPECT_NEAR(d.trace_distance, 0.5, 1e-12);
    EXPECT_NEAR(d.guess_probability, 0.75, 1e-12);
}

TEST(Helstrom, IdenticalAndOrthogonal) {
    const auto same = helstrom_distinguishability(1.1, 1.1);
    EXPECT_NEAR(same.trace_distance, 0.0, 1e-12);
    EXPECT_NEAR(same.guess_probability, 0.5, 1e-12);
    const auto orth = helstrom_distinguishability(0.0, kPi);
    EXPECT_NEAR(orth.trace_distance, 1.0, 1e-12);
    EXPECT_NEAR(orth.guess_probability, 1.0, 1e-12);
}

TEST(Helstrom, MatchesPureStateFormula) {
    Rng rng(3);
    for (int t = 0; t < 1000; ++t) {
        const double a = rng.uniform() * kTwoPi;
        const double b = rng.uniform() * kTwoPi;
        EXPECT_NEAR(helstrom_distinguishability(a, b).trace_distance, oracle_trace_distance(a, b), 1e-9);
    }
}

TEST(ShareDistinguishability, QThree) {
    // Share angles differ by a third of a turn: TD = sin(pi/3).
    const auto d = share_distinguishability(1, 1, 3);
    EXPECT_NEAR(d.trace_distance, std::sqrt(3.0) / 2.0, 1e-12);
    EXPECT_NEAR(d.guess_probability, (1.0 + std::sqrt(3.0) / 2.0) / 2.0, 1e-12);
    EXPECT_NEAR(d.guess_probability, 0.933, 1e-3);
}

TEST(ShareDistinguishability, MaxOverAlternatives) {
    for (std::uint64_t q : {5ull, 7ull, 11ull}) {
        for (std::uint64_t k = 0; k < q; ++k) {
            double best = 0.0;
            for (std::uint64_t other = 0; other < q; ++other) {
                if (other != k) {
                    best = std::max(best, oracle_trace_distance(oracle::encode(2, k, q), oracle::encode(2, other, q)));
                }
            }
            EXPECT_NEAR(share_distinguishability(k, 2, q).trace_distance, best, 1e-9);
        }
    }
}

TEST(CombinerFake, StrippedStatesAreMaskFree) {
    const auto cfg = complete_shares(2, {1, 2}, 3, 1);
    const auto angles = derive_angles(cfg);
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const std::vector<double> masks{rng.uniform() * kTwoPi, rng.uniform() * kTwoPi};
        const std::vector<int> fake{rng.bit(), rng.bit()};
        const auto res = combiner_fake_attack(cfg, masks, fake, example_secret(), 2000, rng.next());
        ASSERT_EQ(res.stripped.size(), 2u);
        for (std::size_t i = 0; i < 2; ++i) {
            EXPECT_NEAR(fidelity_up_to_phase(res.stripped[i], Statevector::from_amplitudes(oracle::plus_phi(angles.phi[i]))),
                        1.0, 1e-9);
            EXPECT_NEAR(res.report.stripped_fidelities[i], 1.0, 1e-9);
        }
        EXPECT_EQ(res.report.scenario, "combiner-fake");
    }
}

TEST(CombinerFake, ZStatisticsMatchExactProbability) {
    const auto cfg = complete_shares(2, {1, 2}, 3, 1);
    const std::vector<double> masks{0.4, 2.0};
    const std::vector<int> fake{0, 1};
    const auto res = combiner_fake_attack(cfg, masks, fake, example_secret(), 20000, 5);
    for (const auto& z : res.report.z_statistics) {
        EXPECT_EQ(z.shots, 20000u);
        EXPECT_NEAR(z.p0_exact, 0.5, 1e-12);
        const double sigma = std::sqrt(0.25 / 20000.0);
        EXPECT_NEAR(z.zeros / 20000.0, z.p0_exact, 4.0 * sigma);
    }
}

TEST(CombinerFake, WrongBitCountThrows) {
    const auto cfg = complete_shares(2, {1, 2}, 3, 1);
    const std::vector<double> masks{0.4, 2.0};
    const std::vector<int> fake{0};
    EXPECT_THROW((void)combiner_fake_attack(cfg, masks, fake, example_secret(), 10, 1), Error);
}

TEST(CollusionOne, PooledAngleIsThreeQuarterDistinguishable) {
    const auto cfg = complete_shares(2, {1, 2}, 3, 1);
    const auto psi = dealer_encrypt(example_secret(), derive_angles(cfg).phi_A);
    const auto r = collusion_one(cfg, psi);
    EXPECT_EQ(r.scenario, "collusion-1");
    ASSERT_FALSE(r.trace_distances.empty());
    ASSERT_TRUE(r.best_guess_fidelity.has_value());
    EXPECT_LE(*r.best_guess_fidelity, 1.0 + 1e-12);
}

TEST(Collapse, MergesIntoCombiner) {
    const auto cfg = split_secret(3, 5, 11, 2);
    for (std::size_t h = 1; h <= 4; ++h) {
        const auto c = collapse_to_three_party(cfg, h);
        EXPECT_EQ(c.n(), 2u);
        EXPECT_EQ(c.shares[0], cfg.shares[h - 1]);
        EXPECT_EQ(c.k_A, cfg.k_A);
        EXPECT_NO_THROW(c.validate());
    }
    try {
        (void)collapse_to_three_party(cfg, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexError);
    }
    EXPECT_THROW((void)collapse_to_three_party(cfg, 0), Error);
}

TEST(CollusionTwo, EqualsFakeAttackOnHonestShareholder) {
    const auto cfg = split_secret(3, 4, 7, 8);
    const std::vector<double> masks{0.3, 1.7, 2.9};
    const auto r2 = collusion_two(cfg, masks, 1, example_secret(), 500, 3);
    const auto three = collapse_to_three_party(cfg, 1);
    const std::vector<double> m1{masks[0]};
    const std::vector<int> fake{1};
    const auto r1 = combiner_fake_attack(three, m1, fake, example_secret(), 500, 3);
    ASSERT_EQ(r2.trace_distances.size(), 1u);
    EXPECT_NEAR(r2.trace_distances[0], r1.report.trace_distances[0], 1e-12);
    EXPECT_NEAR(r2.stripped_fidelities[0], 1.0, 1e-9);
    EXPECT_EQ(r2.scenario, "collusion-2");
}

TEST(External, AbortRateApproachesOne) {
    EXPECT_EQ(external_abort_rate(0, 100, 1), 0.0);
    const double r1 = external_abort_rate(1, 20000, 2);
    EXPECT_NEAR(r1, 0.25, 0.02);
    EXPECT_GT(external_abort_rate(32, 200, 3), 0.99);
}

TEST(Scenario, Names) {
    AttackScenario s;
    EXPECT_EQ(s.name(), "external");
    s.kind = AttackKind::CombinerFakeResults;
    EXPECT_EQ(s.name(), "combiner-fake");
    s.kind = AttackKind::CollusionI;
    EXPECT_EQ(s.name(), "collusion-1");
    s.kind = AttackKind::CollusionII;
    EXPECT_EQ(s.name(), "collusion-2");
}

} // namespace
