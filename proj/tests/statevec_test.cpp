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
#include "qsr/error.hpp"
#include "qsr/rng.hpp"
#include "qsr/statevec.hpp"

namespace {

using namespace qsr;

constexpr double kTight = 1e-12;

double norm_sq(const Statevector& s) {
    double t = 0.0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        t += std::norm(s[i]);
    }
    return t;
}

void expect_amps(const Statevector& s, const oracle::Vec& want, double tol = kTight) {
    ASSERT_EQ(s.dimension(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(s[i].real(), want[i].real(), tol) << "index " << i;
        EXPECT_NEAR(s[i].imag(), want[i].imag(), tol) << "index " << i;
    }
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no qsr::Error thrown";
    return ErrorKind::ConfigError;
}

TEST(Statevector, NewStateIsGround) {
    expect_amps(new_state(1), {1.0, 0.0});
    expect_amps(new_state(2), {1.0, 0.0, 0.0, 0.0});
    EXPECT_EQ(kind_of([] { (void)new_state(0); }), ErrorKind::InvalidArity);
}

TEST(Statevector, HadamardOnZero) {
    Statevector s(1);
    s.apply_1q(Gate::h(), 0);
    const double r = 1.0 / std::sqrt(2.0);
    expect_amps(s, {r, r});
}

TEST(Statevector, DealerRotationOfExampleSecret) {
    auto s = Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0});
    s.apply_1q(Gate::rx(2.0 * kPi / 3.0), 0);
    expect_amps(s, {oracle::C(1.0, -3.0) / 4.0, oracle::C(std::sqrt(3.0), -std::sqrt(3.0)) / 4.0});
}

TEST(Statevector, RzOnPlus) {
    auto s = basis_state(Basis::X, 0);
    s.apply_1q(Gate::rz(kPi / 6.0), 0);
    expect_amps(s, oracle::plus_phi(kPi / 6.0));
}

TEST(Statevector, OneQubitErrors) {
    Statevector s(2);
    EXPECT_EQ(kind_of([&] { s.apply_1q(Gate::x(), 2); }), ErrorKind::IndexError);
    EXPECT_EQ(kind_of([&] { s.apply_1q(Gate::cz(), 0); }), ErrorKind::ArityError);
    EXPECT_EQ(kind_of([&] { s.apply_cz(1, 1); }), ErrorKind::IndexError);
}

TEST(Statevector, ThreeNodePathOfPlusStates) {
    Statevector s(3);
    for (std::size_t q = 0; q < 3; ++q) {
        s.apply_1q(Gate::h(), q);
    }
    s.apply_cz(0, 1);
    s.apply_cz(1, 2);
    const double r = 1.0 / std::sqrt(2.0);
    const auto want = oracle::add(oracle::scale(r, oracle::kron({oracle::plus(), oracle::ket0(), oracle::plus()})),
                                  oracle::scale(r, oracle::kron({oracle::minus(), oracle::ket1(), oracle::minus()})));
    expect_amps(s, oracle::to_lsb(want));
}

TEST(Statevector, CzOnBasisStates) {
    Statevector s(2);
    s.apply_cz(0, 1);
    expect_amps(s, {1.0, 0.0, 0.0, 0.0});
    auto t = Statevector::from_amplitudes({0.0, 0.0, 0.0, 1.0});
    t.apply_cz(1, 0);
    expect_amps(t, {0.0, 0.0, 0.0, -1.0});
}

TEST(Statevector, XMeasurementOfPlusIsDeterministic) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = basis_state(Basis::X, 0);
        const auto m = s.measure(0, Basis::X, Sample{seed});
        EXPECT_EQ(m.outcome, 0);
        EXPECT_NEAR(m.probability, 1.0, kTight);
        EXPECT_NEAR(fidelity_up_to_phase(s, basis_state(Basis::X, 0)), 1.0, kTight);
    }
}

TEST(Statevector, ForcingImpossibleBranchThrows) {
    Statevector s(1);
    EXPECT_EQ(kind_of([&] { (void)s.measure(0, Basis::Z, Forced{1}); }), ErrorKind::ImpossibleOutcome);
}

TEST(Statevector, MeasuredQubitStaysInOutcomeState) {
    Statevector s(2);
    s.apply_1q(Gate::h(), 0);
    s.apply_1q(Gate::h(), 1);
    s.apply_cz(0, 1);
    const auto m = s.measure(0, Basis::X, Forced{1});
    EXPECT_NEAR(m.probability, 0.5, kTight);
    EXPECT_NEAR(s.probability(0, Basis::X, 1), 1.0, kTight);
    EXPECT_NEAR(norm_sq(s), 1.0, kTight);
}

TEST(Statevector, FidelityIgnoresGlobalPhase) {
    const auto psi = Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0});
    auto rotated = psi;
    rotated.scale_phase(std::exp(Complex(0.0, -kPi)));
    EXPECT_NEAR(fidelity_up_to_phase(psi, rotated), 1.0, kTight);
    EXPECT_NEAR(fidelity_up_to_phase(basis_state(Basis::Z, 0), basis_state(Basis::Z, 1)), 0.0, kTight);

    auto r = basis_state(Basis::Z, 0);
    r.apply_1q(Gate::rx(-kPi / 3.0), 0);
    const double want = oracle::fidelity(oracle::ket0(), oracle::apply(oracle::RX(-kPi / 3.0), oracle::ket0()));
    EXPECT_NEAR(fidelity_up_to_phase(basis_state(Basis::Z, 0), r), want, kTight);
    EXPECT_NEAR(want, 0.75, kTight);

    EXPECT_EQ(kind_of([] { (void)fidelity_up_to_phase(Statevector(1), Statevector(2)); }), ErrorKind::DimensionError);
}

TEST(Statevector, FromAmplitudesValidates) {
    EXPECT_EQ(kind_of([] { (void)Statevector::from_amplitudes({1.0, 0.0, 0.0}); }), ErrorKind::DimensionError);
    EXPECT_THROW((void)Statevector::from_amplitudes({1.0, 1.0}), Error);
}

TEST(GateProperties, AllMatricesAreUnitary) {
    Rng rng(5);
    std::vector<Gate> gates{Gate::i(), Gate::x(), Gate::z(), Gate::h()};
    for (int k = 0; k < 50; ++k) {
        const double t = (rng.uniform() - 0.5) * 8.0 * kPi;
        gates.push_back(Gate::rx(t));
        gates.push_back(Gate::ry(t));
        gates.push_back(Gate::rz(t));
    }
    for (const auto& g : gates) {
        EXPECT_LT((g.matrix().adjoint() * g.matrix()).max_abs_diff(Mat2::identity()), kTight);
    }
}

TEST(GateProperties, AnglesAreCanonicalized) {
    EXPECT_NEAR(Gate::rz(-kPi / 2.0).angle(), 3.0 * kPi / 2.0, kTight);
    EXPECT_NEAR(Gate::rx(5.0 * kPi).angle(), kPi, kTight);
    EXPECT_GE(Gate::ry(-1e-18).angle(), 0.0);
    EXPECT_LT(Gate::ry(-1e-18).angle(), kTwoPi);
}

TEST(GateProperties, HadamardConjugatesRzIntoRx) {
    Rng rng(9);
    for (int k = 0; k < 100; ++k) {
        const double a = rng.uniform() * kTwoPi;
        const Mat2 lhs = Gate::h().matrix() * Gate::rz(a).matrix() * Gate::h().matrix();
        EXPECT_LT(lhs.max_abs_diff(Gate::rx(a).matrix()), kTight);
    }
}

TEST(GateProperties, MatricesAgreeWithReference) {
    Rng rng(17);
    for (int k = 0; k < 50; ++k) {
        const double t = rng.uniform() * kTwoPi;
        const std::pair<Gate, oracle::Mat> pairs[] = {
            {Gate::rx(t), oracle::RX(t)}, {Gate::ry(t), oracle::RY(t)}, {Gate::rz(t), oracle::RZ(t)}};
        for (const auto& [g, ref] : pairs) {
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    EXPECT_NEAR(std::abs(g.matrix()(r, c) - ref(r, c)), 0.0, kTight);
                }
            }
        }
    }
}

TEST(StatevectorProperties, NormSurvivesRandomCircuits) {
    Rng rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t nq = 1 + rng.below(6);
        Statevector s(nq);
        for (int g = 0; g < 12; ++g) {
            const std::size_t q = rng.below(nq);
            const double t = rng.uniform() * kTwoPi;
            switch (rng.below(6)) {
            case 0: s.apply_1q(Gate::h(), q); break;
            case 1: s.apply_1q(Gate::rx(t), q); break;
            case 2: s.apply_1q(Gate::ry(t), q); break;
            case 3: s.apply_1q(Gate::rz(t), q); break;
            case 4: s.apply_1q(Gate::x(), q); break;
            default:
                if (nq > 1) {
                    s.apply_cz(q, (q + 1 + rng.below(nq - 1)) % nq);
                }
            }
        }
        ASSERT_LT(std::abs(norm_sq(s) - 1.0), 1e-10);
    }
}

TEST(StatevectorProperties, GatesMatchKroneckerReference) {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t nq = 1 + rng.below(4);
        Statevector s(nq);
        oracle::Vec ref(std::size_t{1} << nq);
        ref[0] = 1.0;
        for (int g = 0; g < 8; ++g) {
            const std::size_t q = rng.below(nq);
            const double t = rng.uniform() * kTwoPi;
            if (rng.bit() && nq > 1) {
                const std::size_t b = (q + 1 + rng.below(nq - 1)) % nq;
                s.apply_cz(q, b);
                ref = oracle::apply(oracle::CZ(q, b, nq), ref);
            } else {
                s.apply_1q(Gate::ry(t), q);
                ref = oracle::apply(oracle::on(oracle::RY(t), q, nq), ref);
                s.apply_1q(Gate::rz(t / 3.0), q);
                ref = oracle::apply(oracle::on(oracle::RZ(t / 3.0), q, nq), ref);
            }
        }
        expect_amps(s, oracle::to_lsb(ref), 1e-12);
    }
}

TEST(StatevectorProperties, BornFrequenciesInXBasis) {
    for (double theta : {0.3, 1.1, 2.0, 2.9}) {
        auto base = basis_state(Basis::X, 0);
        base.apply_1q(Gate::rz(theta), 0);
        const double p0 = std::pow(std::cos(theta / 2.0), 2);
        std::size_t zeros = 0;
        constexpr std::size_t shots = 10000;
        for (std::size_t k = 0; k < shots; ++k) {
            auto s = base;
            zeros += s.measure(0, Basis::X, Sample{derive_seed(99, k)}).outcome == 0 ? 1 : 0;
        }
        const double sigma = std::sqrt(p0 * (1 - p0) / shots);
        EXPECT_NEAR(static_cast<double>(zeros) / shots, p0, 3.0 * sigma + 1e-12) << "theta " << theta;
    }
}

TEST(StatevectorProperties, FidelityPhaseInvariance) {
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        Statevector s(2);
        s.apply_1q(Gate::ry(rng.uniform() * kTwoPi), 0);
        s.apply_1q(Gate::rx(rng.uniform() * kTwoPi), 1);
        s.apply_cz(0, 1);
        auto t = s;
        t.scale_phase(std::polar(1.0, rng.uniform() * kTwoPi));
        EXPECT_NEAR(fidelity_up_to_phase(s, t), 1.0, kTight);
    }
}

} // namespace
