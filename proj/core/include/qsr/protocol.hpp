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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsr/channel.hpp"
#include "qsr/error.hpp"
#include "qsr/shares.hpp"
#include "qsr/statevec.hpp"

namespace qsr {

enum class RoleKind { Dealer, Shareholder, Combiner };

struct PartyRole {
    RoleKind kind = RoleKind::Dealer;
    /// Chain position 1..n-1 for shareholders, unused otherwise.
    std::size_t index = 0;

    /// "dealer", "bob<i>" or "combiner".
    [[nodiscard]] std::string name() const;
};

enum class AnnouncementKind { RandomizerS, MeasurementResult, RotationAngle };

struct Announcement {
    std::size_t seq = 0;
    AnnouncementKind kind = AnnouncementKind::RandomizerS;
    PartyRole sender;
    /// Shareholder the announcement concerns (0 for the randomizer).
    std::size_t subject = 0;
    double value = 0.0;
};

/// Append-only public board. Order is enforced: s first, then for each
/// round i = 1, 2, ... the combiner's m_i followed by shareholder i's theta_i.
/// Any other order is a ProtocolViolation.
class AnnouncementLog {
public:
    void announce_randomizer(std::uint64_t s);
    void announce_measurement(std::size_t round, int outcome);
    void announce_angle(std::size_t round, double theta);

    [[nodiscard]] const std::vector<Announcement>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t completed_rounds() const noexcept { return completed_rounds_; }

private:
    void push(AnnouncementKind kind, PartyRole sender, std::size_t subject, double value);

    std::vector<Announcement> entries_;
    bool has_randomizer_ = false;
    std::size_t completed_rounds_ = 0;
    bool awaiting_angle_ = false;
};

struct CostCounters {
    std::uint64_t additions = 0;
    std::uint64_t multiplications = 0;
};

/// One party's phi computation under the cost model: the k/q*2pi factor is
/// computed once (two multiplications) and each randomizer costs one more.
/// The returned angle is the exact encode_angle value.
class AngleEncoder {
public:
    AngleEncoder(std::uint64_t share, std::uint64_t q);

    double angle(std::uint64_t s);
    [[nodiscard]] std::uint64_t multiplications() const noexcept { return multiplications_; }

private:
    std::uint64_t share_;
    std::uint64_t q_;
    bool cached_ = false;
    std::uint64_t multiplications_ = 0;
};

/// R_X(phi_A)|psi>.
Statevector dealer_encrypt(const Statevector& psi, double phi_A);

/// R_Z(omega)|+>.
Statevector shareholder_prepare(double omega);

/// theta = (-1)^(m+1) omega + phi, reduced to [0, 2pi).
double shareholder_respond(int outcome, double omega, double phi);

using ResponseRule = std::function<double(int outcome, double omega, double phi)>;

struct RoundResult {
    int outcome;
    double probability;
    Statevector state;
};

/// One combiner round: CZ the data qubit with the received mask qubit,
/// measure the data qubit in X (announcing m), apply X^m to the new qubit,
/// obtain theta from `respond(m)` (announced) and apply R_X(theta) H.
RoundResult combiner_round(const Statevector& data, const Statevector& mask_qubit, std::size_t round,
                           const std::function<double(int)>& respond, const OutcomePolicy& policy,
                           AnnouncementLog& log);

enum class Engine { Lazy, Eager };

inline constexpr std::size_t kMaxEagerParties = 12;

struct ProtocolInput {
    ShareConfig shares;
    Statevector secret{1};
    std::uint64_t seed = 0;
    ChannelSettings channel;
    /// One bit per shareholder round; empty means sample from the seed.
    std::vector<int> forced_outcomes;
    /// Explicit omega_1..omega_{n-1}; empty means each shareholder samples its own.
    std::vector<double> masks;
    /// Uses these phi angles instead of encoding the shares (replay fixtures).
    std::optional<AngleSet> angle_override;
    /// Applied to every transmission when set.
    Eavesdropper eavesdropper;
    Engine engine = Engine::Lazy;
    /// Agent 1..n acting as combiner; 0 means agent n.
    std::size_t combiner_agent = 0;
    ResponseRule respond = shareholder_respond;
};

struct LinkReport {
    std::string link;
    ChannelReport report;
};

struct ConfigEcho {
    std::size_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t s = 0;
    std::uint64_t seed = 0;
    std::size_t decoys = 0;
    double threshold = 0.0;
    std::size_t combiner_agent = 0;
    std::string engine;
};

enum class RunStatus { Recovered, Aborted };

struct Transcript {
    ConfigEcho config;
    std::vector<Announcement> announcements;
    std::vector<LinkReport> channel_reports;
    CostCounters counters;
    std::optional<Statevector> recovered;
    std::optional<double> fidelity;
    RunStatus status = RunStatus::Aborted;
    std::optional<ErrorKind> abort_reason;

    /// "Recovered" or "Aborted(<reason>)".
    [[nodiscard]] std::string verdict() const;
    [[nodiscard]] std::vector<double> thetas() const;
    [[nodiscard]] std::vector<int> outcomes() const;
};

/// Runs S1 through the final R_X(phi_C). Channel aborts and announcement-order
/// violations end in an Aborted transcript; invalid configs throw.
Transcript run_protocol(const ProtocolInput& input);

struct MultiSecretInput {
    ShareConfig shares;
    std::vector<Statevector> secrets;
    std::vector<std::uint64_t> randomizers;
    std::vector<std::uint64_t> seeds;
    ChannelSettings channel;
    /// Combiner agent per secret; empty rotates n, n-1, ..., 1, n, ...
    std::vector<std::size_t> combiners;
};

/// One reconstruction per secret over the same shares, each with fresh
/// masks; parties keep their cached share factors across runs.
std::vector<Transcript> run_multi_secret(const MultiSecretInput& input);

/// State of all chain qubits at one stage of a traced run.
struct TraceRow {
    std::string stage;
    Statevector state;
};

struct ExampleFixture {
    Statevector secret;
    AngleSet angles;
    std::vector<int> outcomes;
};

/// psi = 1/2|0> + sqrt(3)/2|1>, phi = (2pi/3, pi/3, 2pi/3, pi/3),
/// omega = (pi/6, pi), outcomes (0, 1).
ExampleFixture worked_example();

/// Full-register replay of a forced run: the product state, the entangled
/// chain, then per round the post-measurement state and the state after
/// X^m and R_X(theta)H, and finally the state after R_X(phi_C). Corrections act
/// before the qubit's outgoing CZ, so each row shows that edge applied.
/// Chain qubit 0 is the dealer's particle.
std::vector<TraceRow> trace_run(const ExampleFixture& fixture, const ResponseRule& respond = shareholder_respond);

} // namespace qsr
