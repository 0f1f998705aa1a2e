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

#include "qsr/protocol.hpp"

#include <cmath>
#include <utility>

#include "qsr/cluster.hpp"
#include "qsr/rng.hpp"

namespace qsr {

std::string PartyRole::name() const {
    switch (kind) {
    case RoleKind::Dealer: return "dealer";
    case RoleKind::Shareholder: return "bob" + std::to_string(index);
    case RoleKind::Combiner: return "combiner";
    }
    return "unknown";
}

void AnnouncementLog::push(AnnouncementKind kind, PartyRole sender, std::size_t subject, double value) {
    entries_.push_back({entries_.size(), kind, sender, subject, value});
}

void AnnouncementLog::announce_randomizer(std::uint64_t s) {
    if (has_randomizer_ || !entries_.empty()) {
        throw Error(ErrorKind::ProtocolViolation, "randomizer s must be the first and only S1 announcement");
    }
    has_randomizer_ = true;
    push(AnnouncementKind::RandomizerS, {RoleKind::Dealer, 0}, 0, static_cast<double>(s));
}

void AnnouncementLog::announce_measurement(std::size_t round, int outcome) {
    if (!has_randomizer_) {
        throw Error(ErrorKind::ProtocolViolation, "measurement announced before s");
    }
    if (awaiting_angle_ || round != completed_rounds_ + 1) {
        throw Error(ErrorKind::ProtocolViolation,
                    "m_" + std::to_string(round) + " announced out of order");
    }
    if (outcome != 0 && outcome != 1) {
        throw Error(ErrorKind::ProtocolViolation, "measurement result must be a bit");
    }
    awaiting_angle_ = true;
    push(AnnouncementKind::MeasurementResult, {RoleKind::Combiner, 0}, round, outcome);
}

void AnnouncementLog::announce_angle(std::size_t round, double theta) {
    if (!awaiting_angle_ || round != completed_rounds_ + 1) {
        throw Error(ErrorKind::ProtocolViolation,
                    "theta_" + std::to_string(round) + " announced without a preceding m_" + std::to_string(round));
    }
    awaiting_angle_ = false;
    ++completed_rounds_;
    push(AnnouncementKind::RotationAngle, {RoleKind::Shareholder, round}, round, theta);
}

AngleEncoder::AngleEncoder(std::uint64_t share, std::uint64_t q) : share_(share), q_(q) {
    check_modulus(q);
}

double AngleEncoder::angle(std::uint64_t s) {
    if (!cached_) {
        cached_ = true;
        multiplications_ += 2;
    }
    ++multiplications_;
    return encode_angle(s, share_, q_);
}

Statevector dealer_encrypt(const Statevector& psi, double phi_A) {
    if (psi.num_qubits() != 1) {
        throw Error(ErrorKind::DimensionError, "the private state is a single qubit");
    }
    Statevector out = psi;
    out.apply_1q(Gate::rx(phi_A), 0);
    return out;
}

Statevector shareholder_prepare(double omega) { return rotated_plus(omega); }

double shareholder_respond(int outcome, double omega, double phi) {
    const double sign = outcome ? 1.0 : -1.0;
    return canonical_angle(sign * omega + phi);
}

namespace {

Mat2 round_correction(int outcome, double theta) {
    Mat2 u = Gate::rx(theta).matrix() * Gate::h().matrix();
    if (outcome) {
        u = u * Gate::x().matrix();
    }
    return u;
}

} // namespace

RoundResult combiner_round(const Statevector& data, const Statevector& mask_qubit, std::size_t round,
                           const std::function<double(int)>& respond, const OutcomePolicy& policy,
                           AnnouncementLog& log) {
    LazyStep step = lazy_step_with(data, mask_qubit, 0.0, policy);
    log.announce_measurement(round, step.outcome);
    if (step.outcome) {
        step.output.apply_1q(Gate::x(), 0);
    }
    const double theta = respond(step.outcome);
    log.announce_angle(round, theta);
    step.output.apply_1q(Gate::h(), 0);
    step.output.apply_1q(Gate::rx(theta), 0);
    return {step.outcome, step.probability, std::move(step.output)};
}

std::string Transcript::verdict() const {
    if (status == RunStatus::Recovered) {
        return "Recovered";
    }
    return "Aborted(" + std::string(to_string(abort_reason.value_or(ErrorKind::ProtocolViolation))) + ")";
}

std::vector<double> Transcript::thetas() const {
    std::vector<double> out;
    for (const auto& a : announcements) {
        if (a.kind == AnnouncementKind::RotationAngle) {
            out.push_back(a.value);
        }
    }
    return out;
}

std::vector<int> Transcript::outcomes() const {
    std::vector<int> out;
    for (const auto& a : announcements) {
        if (a.kind == AnnouncementKind::MeasurementResult) {
            out.push_back(static_cast<int>(a.value));
        }
    }
    return out;
}

namespace {

// Long-lived party state. Only the share and its cached encoder persist
// across reconstructions; masks are per session.
struct Parties {
    AngleEncoder dealer;
    std::vector<AngleEncoder> agents;

    explicit Parties(const ShareConfig& config) : dealer(config.k_A, config.q) {
        for (std::size_t a = 1; a <= config.n(); ++a) {
            agents.emplace_back(config.agent_share(a), config.q);
        }
    }

    [[nodiscard]] std::uint64_t multiplications() const {
        std::uint64_t total = dealer.multiplications();
        for (const auto& a : agents) {
            total += a.multiplications();
        }
        return total;
    }
};

std::uint64_t stream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    return derive_seed(derive_seed(seed, label), index);
}

void mark_aborted(Transcript& t, ErrorKind reason) {
    t.status = RunStatus::Aborted;
    t.abort_reason = reason;
    t.fidelity.reset();
}

Transcript run_session(Parties& parties, const ProtocolInput& input) {
    const ShareConfig& config = input.shares;
    config.validate();
    const std::size_t n = config.n();
    const std::size_t rounds = n - 1;
    const std::size_t combiner = input.combiner_agent == 0 ? n : input.combiner_agent;
    if (combiner > n) {
        throw Error(ErrorKind::IndexError, "combiner agent " + std::to_string(combiner) + " out of range");
    }
    if (input.secret.num_qubits() != 1) {
        throw Error(ErrorKind::DimensionError, "the private state is a single qubit");
    }
    if (!input.forced_outcomes.empty() && input.forced_outcomes.size() != rounds) {
        throw Error(ErrorKind::DimensionError, "need one forced outcome per shareholder round");
    }
    if (!input.masks.empty() && input.masks.size() != rounds) {
        throw Error(ErrorKind::DimensionError, "need one mask per shareholder");
    }
    if (input.engine == Engine::Eager && n > kMaxEagerParties) {
        throw Error(ErrorKind::InvalidArity, "eager engine is limited to " + std::to_string(kMaxEagerParties) +
                                                 " chain qubits");
    }

    // Chain position i (1..n-1) holds the i-th agent other than the combiner.
    std::vector<std::size_t> chain_agent;
    for (std::size_t a = 1; a <= n; ++a) {
        if (a != combiner) {
            chain_agent.push_back(a);
        }
    }

    Transcript t;
    t.config = {n,
                config.q,
                config.s,
                input.seed,
                input.channel.decoys,
                input.channel.threshold,
                combiner,
                input.engine == Engine::Lazy ? "lazy" : "eager"};
    AnnouncementLog log;
    const std::uint64_t mul_before = parties.multiplications();

    // S1
    log.announce_randomizer(config.s);
    AngleSet angles;
    if (input.angle_override) {
        angles = *input.angle_override;
        if (angles.phi.size() != rounds) {
            throw Error(ErrorKind::DimensionError, "angle override has the wrong party count");
        }
    } else {
        angles.phi_A = parties.dealer.angle(config.s);
        for (std::size_t i = 0; i < rounds; ++i) {
            angles.phi.push_back(parties.agents[chain_agent[i] - 1].angle(config.s));
        }
        angles.phi_C = parties.agents[combiner - 1].angle(config.s);
    }
    angles.r = check_angle_sum(angles);
    t.counters.multiplications = parties.multiplications() - mul_before;

    const Statevector encrypted = dealer_encrypt(input.secret, angles.phi_A);

    // S3 mask choice, private to each shareholder.
    for (std::size_t i = 0; i < rounds; ++i) {
        angles.masks.push_back(input.masks.empty()
                                   ? Rng(stream(input.seed, "mask", chain_agent[i])).uniform() * kTwoPi
                                   : input.masks[i]);
    }

    // S2/S3 transmissions to the combiner.
    std::vector<Statevector> received;
    for (std::size_t link = 0; link <= rounds; ++link) {
        const Statevector payload = link == 0 ? encrypted : shareholder_prepare(angles.masks[link - 1]);
        Dispatch d = send_with_decoys(payload, input.channel.decoys, stream(input.seed, "link", link));
        if (input.eavesdropper) {
            d.transmission = input.eavesdropper(std::move(d.transmission), stream(input.seed, "eve", link));
        }
        const ChannelReport report =
            detect(d.transmission, d.record, input.channel.threshold, stream(input.seed, "detect", link));
        t.channel_reports.push_back(
            {(link == 0 ? std::string("dealer") : PartyRole{RoleKind::Shareholder, link}.name()) + "->combiner",
             report});
        if (report.verdict == Verdict::Abort) {
            t.announcements = log.entries();
            mark_aborted(t, ErrorKind::ChannelError);
            return t;
        }
        received.push_back(received_payload(d.transmission, d.record));
    }

    std::vector<OutcomePolicy> policies;
    for (std::size_t i = 0; i < rounds; ++i) {
        if (input.forced_outcomes.empty()) {
            policies.emplace_back(Sample{stream(input.seed, "outcome", i + 1)});
        } else {
            policies.emplace_back(Forced{input.forced_outcomes[i]});
        }
    }
    auto respond_for = [&](std::size_t round) {
        return [&, round](int m) {
            ++t.counters.additions;
            return input.respond(m, angles.masks[round - 1], angles.phi[round - 1]);
        };
    };

    std::optional<Statevector> data;
    try {
        if (input.engine == Engine::Lazy) {
            data = received[0];
            for (std::size_t i = 1; i <= rounds; ++i) {
                RoundResult r = combiner_round(*data, received[i], i, respond_for(i), policies[i - 1], log);
                data = std::move(r.state);
            }
        } else {
            std::vector<ChainStep> steps;
            for (std::size_t i = 1; i <= rounds; ++i) {
                ChainStep step;
                step.partner = received[i];
                step.feed_forward = [&, i, respond = respond_for(i)](int m) {
                    log.announce_measurement(i, m);
                    const double theta = respond(m);
                    log.announce_angle(i, theta);
                    return round_correction(m, theta);
                };
                steps.push_back(std::move(step));
            }
            data = run_eager_chain(received[0], steps, policies).output;
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ProtocolViolation) {
            throw;
        }
        t.announcements = log.entries();
        mark_aborted(t, ErrorKind::ProtocolViolation);
        return t;
    }

    data->apply_1q(Gate::rx(angles.phi_C), 0);
    t.announcements = log.entries();
    t.fidelity = fidelity_up_to_phase(*data, input.secret);
    t.recovered = std::move(data);
    t.status = RunStatus::Recovered;
    return t;
}

} // namespace

Transcript run_protocol(const ProtocolInput& input) {
    input.shares.validate();
    Parties parties(input.shares);
    return run_session(parties, input);
}

std::vector<Transcript> run_multi_secret(const MultiSecretInput& input) {
    const std::size_t w = input.secrets.size();
    if (w < 2) {
        throw Error(ErrorKind::InvalidArity, "multiple-secret sharing needs at least two secrets");
    }
    if (input.randomizers.size() != w || input.seeds.size() != w ||
        (!input.combiners.empty() && input.combiners.size() != w)) {
        throw Error(ErrorKind::DimensionError, "need one randomizer, seed and combiner choice per secret");
    }
    input.shares.validate();
    const std::size_t n = input.shares.n();
    for (auto s : input.randomizers) {
        if (s == 0 || s >= input.shares.q) {
            throw Error(ErrorKind::BadRandomizer, "randomizer " + std::to_string(s) + " outside {1, ..., q-1}");
        }
    }

    Parties parties(input.shares);
    std::vector<Transcript> out;
    for (std::size_t j = 0; j < w; ++j) {
        ProtocolInput run;
        run.shares = input.shares;
        run.shares.s = input.randomizers[j];
        run.secret = input.secrets[j];
        run.seed = input.seeds[j];
        run.channel = input.channel;
        run.combiner_agent = input.combiners.empty() ? n - (j % n) : input.combiners[j];
        out.push_back(run_session(parties, run));
    }
    return out;
}

ExampleFixture worked_example() {
    ExampleFixture f{Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0}), {}, {0, 1}};
    f.angles.phi_A = 2.0 * kPi / 3.0;
    f.angles.phi = {kPi / 3.0, 2.0 * kPi / 3.0};
    f.angles.phi_C = kPi / 3.0;
    f.angles.masks = {kPi / 6.0, kPi};
    f.angles.r = 1;
    return f;
}

std::vector<TraceRow> trace_run(const ExampleFixture& fixture, const ResponseRule& respond) {
    const AngleSet& a = fixture.angles;
    const std::size_t rounds = a.phi.size();
    if (a.masks.size() != rounds || fixture.outcomes.size() != rounds) {
        throw Error(ErrorKind::DimensionError, "fixture needs one mask and one outcome per shareholder");
    }
    const std::size_t n = rounds + 1;
    std::vector<Statevector> nodes{dealer_encrypt(fixture.secret, a.phi_A)};
    for (double omega : a.masks) {
        nodes.push_back(shareholder_prepare(omega));
    }

    std::vector<TraceRow> rows;
    Statevector state = Statevector::product(nodes);
    rows.push_back({"transmitted", state});
    const ClusterGraph path = ClusterGraph::path(n);
    for (const auto& e : path.edges()) {
        state.apply_cz(e.a, e.b);
    }
    rows.push_back({"entangled", state});

    for (std::size_t i = 1; i <= rounds; ++i) {
        const int m = fixture.outcomes[i - 1];
        state.measure(i - 1, Basis::X, Forced{m});
        rows.push_back({"measured m" + std::to_string(i) + "=" + std::to_string(m), state});
        const double theta = respond(m, a.masks[i - 1], a.phi[i - 1]);
        const bool pending_edge = i + 1 < n;
        if (pending_edge) {
            state.apply_cz(i, i + 1);
        }
        state.apply_matrix(round_correction(m, theta), i);
        if (pending_edge) {
            state.apply_cz(i, i + 1);
        }
        rows.push_back({"R_X(theta" + std::to_string(i) + ")H applied", state});
    }
    state.apply_1q(Gate::rx(a.phi_C), n - 1);
    rows.push_back({"R_X(phi_C) applied", state});
    return rows;
}

} // namespace qsr
