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

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "qsr/cluster.hpp"
#include "qsr/error.hpp"
#include "qsr/protocol.hpp"
#include "qsr/rng.hpp"

namespace {

using namespace qsr;

Statevector lift(const oracle::Vec& msb) { return Statevector::from_amplitudes(oracle::to_lsb(msb)); }

TEST(ClusterGraph, RejectsMalformedEdges) {
    EXPECT_THROW(ClusterGraph(2, {{0, 0}}), Error);
    EXPECT_THROW(ClusterGraph(2, {{0, 1}, {1, 0}}), Error);
    EXPECT_THROW(ClusterGraph(2, {{0, 2}}), Error);
    EXPECT_THROW(ClusterGraph(0, {}), Error);
    const auto p = ClusterGraph::path(4);
    EXPECT_EQ(p.edges().size(), 3u);
    EXPECT_EQ(p.neighbors(1), (std::vector<std::size_t>{0, 2}));
}

TEST(BuildCluster, CanonicalThreePath) {
    const auto c = canonical_cluster(ClusterGraph::path(3));
    const double r = 1.0 / std::sqrt(2.0);
    const auto want = oracle::add(oracle::scale(r, oracle::kron({oracle::plus(), oracle::ket0(), oracle::plus()})),
                                  oracle::scale(r, oracle::kron({oracle::minus(), oracle::ket1(), oracle::minus()})));
    EXPECT_LT(max_amplitude_diff(c, lift(want)), 1e-12);
}

TEST(BuildCluster, ExampleChainMatchesEntangledRow) {
    auto psi = Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0});
    psi.apply_1q(Gate::rx(2.0 * kPi / 3.0), 0);
    const std::vector<Statevector> nodes{psi, rotated_plus(kPi / 6.0), rotated_plus(kPi)};
    const auto c = build_cluster(ClusterGraph::path(3), nodes);
    EXPECT_LT(max_amplitude_diff(c, lift(oracle::worked_example_rows()[1])), 1e-12);
}

TEST(BuildCluster, SingleVertexAndCountMismatch) {
    const std::vector<Statevector> one{Statevector(1)};
    const auto s = build_cluster(ClusterGraph(1, {}), one);
    EXPECT_LT(max_amplitude_diff(s, Statevector(1)), 1e-15);
    EXPECT_THROW((void)build_cluster(ClusterGraph::path(2), one), Error);
}

TEST(BuildCluster, EdgeOrderIsIrrelevant) {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}};
        std::vector<Statevector> nodes;
        for (int v = 0; v < 4; ++v) {
            nodes.push_back(rotated_plus(rng.uniform() * kTwoPi));
        }
        const auto a = build_cluster(ClusterGraph(4, edges), nodes);
        std::shuffle(edges.begin(), edges.end(), rng);
        const auto b = build_cluster(ClusterGraph(4, edges), nodes);
        for (std::size_t i = 0; i < a.dimension(); ++i) {
            EXPECT_EQ(a[i], b[i]);
        }
    }
}

TEST(Stabilizers, CanonicalThreePathResidualsVanish) {
    const auto g = ClusterGraph::path(3);
    for (double r : verify_stabilizers(g, canonical_cluster(g))) {
        EXPECT_LT(r, 1e-12);
    }
}

TEST(Stabilizers, GroundStateResidualAtFirstAnchor) {
    const auto g = ClusterGraph::path(3);
    // K_0 = X on 0, Z on 1: maps |000> to |100>, a distance sqrt(2) away.
    EXPECT_NEAR(verify_stabilizers(g, Statevector(3))[0], std::sqrt(2.0), 1e-12);
}

TEST(Stabilizers, RandomGraphsAreFixpoints) {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t v = 1 + rng.below(6);
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < v; ++a) {
            for (std::size_t b = a + 1; b < v; ++b) {
                if (rng.bit()) {
                    edges.push_back({a, b});
                }
            }
        }
        const ClusterGraph g(v, edges);
        for (double r : verify_stabilizers(g, canonical_cluster(g))) {
            ASSERT_LT(r, 1e-12);
        }
    }
}

oracle::Vec lazy_reference(const oracle::Vec& in, double omega, int m, double theta) {
    oracle::Vec v = oracle::apply(oracle::RZ(-theta), in);
    v = oracle::apply(oracle::H(), v);
    if (m) {
        v = oracle::apply(oracle::X(), v);
    }
    return oracle::apply(oracle::RZ(omega), v);
}

TEST(LazyStep, ZeroAngleOutcomeZero) {
    auto psi = Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0});
    psi.apply_1q(Gate::rx(2.0 * kPi / 3.0), 0);
    const auto step = lazy_step(psi, kPi / 6.0, 0.0, Forced{0});
    const oracle::Vec in{psi[0], psi[1]};
    const auto want = lazy_reference(in, kPi / 6.0, 0, 0.0);
    EXPECT_NEAR(fidelity_up_to_phase(step.output, Statevector::from_amplitudes(want)), 1.0, 1e-12);
}

TEST(LazyStep, PlusInputGivesZero) {
    const auto step = lazy_step(basis_state(Basis::X, 0), 0.0, 0.0, Forced{0});
    EXPECT_NEAR(fidelity_up_to_phase(step.output, basis_state(Basis::Z, 0)), 1.0, 1e-12);
}

TEST(LazyStep, BothBranchesEquallyLikely) {
    for (int m = 0; m < 2; ++m) {
        const auto step = lazy_step(Statevector(1), 0.0, 0.0, Forced{m});
        EXPECT_NEAR(step.probability, 0.5, 1e-12);
    }
}

TEST(LazyStep, MatchesReferenceForRandomAngles) {
    Rng rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const double polar = rng.uniform() * kPi;
        const oracle::Vec in{std::cos(polar / 2), std::polar(std::sin(polar / 2), rng.uniform() * kTwoPi)};
        const double omega = rng.uniform() * kTwoPi;
        const double theta = rng.uniform() * kTwoPi;
        const int m = rng.bit();
        const auto step = lazy_step(Statevector::from_amplitudes(in), omega, theta, Forced{m});
        const auto want = Statevector::from_amplitudes(lazy_reference(in, omega, m, theta));
        ASSERT_NEAR(fidelity_up_to_phase(step.output, want), 1.0, 1e-12);
        double n = std::norm(step.output[0]) + std::norm(step.output[1]);
        ASSERT_NEAR(n, 1.0, 1e-12);
    }
}

std::vector<ChainStep> protocol_steps(const std::vector<double>& masks, const std::vector<double>& thetas) {
    std::vector<ChainStep> steps;
    for (std::size_t j = 0; j < masks.size(); ++j) {
        ChainStep s;
        s.mask = masks[j];
        const double t = thetas[j];
        s.feed_forward = [t](int m) {
            const Mat2 base = Gate::rx(t).matrix() * Gate::h().matrix();
            return m ? base * Gate::x().matrix() : base;
        };
        steps.push_back(std::move(s));
    }
    return steps;
}

TEST(EagerLazy, ExampleConfiguration) {
    const auto ex = worked_example();
    const auto input = dealer_encrypt(ex.secret, ex.angles.phi_A);
    std::vector<double> thetas;
    for (std::size_t i = 0; i < 2; ++i) {
        thetas.push_back(shareholder_respond(ex.outcomes[i], ex.angles.masks[i], ex.angles.phi[i]));
    }
    const auto steps = protocol_steps(ex.angles.masks, thetas);
    EXPECT_TRUE(eager_equals_lazy(input, steps, ex.outcomes));
}

TEST(EagerLazy, TwoNodeGrid) {
    for (int a = 0; a < 8; ++a) {
        auto input = Statevector(1);
        input.apply_1q(Gate::ry(a * kPi / 4.0), 0);
        input.apply_1q(Gate::rz(a * 0.7), 0);
        for (int b = 0; b < 8; ++b) {
            const auto steps = protocol_steps({b * kPi / 4.0}, {1.0 + b});
            const int outcome[] = {0};
            EXPECT_TRUE(eager_equals_lazy(input, steps, outcome)) << a << "," << b;
        }
    }
}

TEST(EagerLazy, IdentityChain) {
    std::vector<ChainStep> steps(4);
    const std::vector<int> outcomes(4, 0);
    EXPECT_TRUE(eager_equals_lazy(basis_state(Basis::X, 1), steps, outcomes));
}

TEST(EagerLazy, LengthMismatchThrows) {
    std::vector<ChainStep> steps(2);
    const std::vector<int> outcomes{0};
    try {
        (void)eager_equals_lazy(Statevector(1), steps, outcomes);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionError);
    }
}

TEST(EagerLazy, RandomInstances) {
    Rng rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + rng.below(7);
        auto input = Statevector(1);
        input.apply_1q(Gate::ry(rng.uniform() * kTwoPi), 0);
        input.apply_1q(Gate::rz(rng.uniform() * kTwoPi), 0);
        std::vector<double> masks;
        std::vector<double> thetas;
        std::vector<int> outcomes;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            masks.push_back(rng.uniform() * kTwoPi);
            thetas.push_back(rng.uniform() * kTwoPi);
            outcomes.push_back(rng.bit());
        }
        auto steps = protocol_steps(masks, thetas);
        for (auto& s : steps) {
            s.measure_angle = rng.uniform() * kTwoPi;
        }
        const auto rep = compare_eager_lazy(input, steps, outcomes);
        ASSERT_TRUE(rep.equivalent()) << "fidelity " << rep.fidelity;
    }
}

} // namespace
