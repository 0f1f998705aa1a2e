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

#include "qsr/attacks.hpp"

#include <algorithm>
#include <cmath>

#include "qsr/cluster.hpp"
#include "qsr/error.hpp"
#include "qsr/protocol.hpp"
#include "qsr/rng.hpp"

namespace qsr {

std::string AttackScenario::name() const {
    switch (kind) {
    case AttackKind::ExternalInterceptResend: return "external";
    case AttackKind::CombinerFakeResults: return "combiner-fake";
    case AttackKind::CollusionI: return "collusion-1";
    case AttackKind::CollusionII: return "collusion-2";
    }
    return "unknown";
}

Distinguishability helstrom_distinguishability(double phi, double phi_prime) {
    const Statevector a = rotated_plus(phi);
    const Statevector b = rotated_plus(phi_prime);
    // Hermitian D = |a><a| - |b><b| = [[p, c], [conj(c), d]].
    const double p = std::norm(a[0]) - std::norm(b[0]);
    const double d = std::norm(a[1]) - std::norm(b[1]);
    const Complex c = a[0] * std::conj(a[1]) - b[0] * std::conj(b[1]);
    const double mean = (p + d) / 2.0;
    const double radius = std::sqrt((p - d) * (p - d) / 4.0 + std::norm(c));
    const double td = std::min(1.0, (std::abs(mean + radius) + std::abs(mean - radius)) / 2.0);
    return {td, (1.0 + td) / 2.0};
}

Distinguishability share_distinguishability(std::uint64_t k, std::uint64_t s, std::uint64_t q) {
    const double phi = encode_angle(s, k, q);
    Distinguishability best{0.0, 0.5};
    for (std::uint64_t other = 0; other < q; ++other) {
        if (other == k % q) {
            continue;
        }
        const auto d = helstrom_distinguishability(phi, encode_angle(s, other, q));
        if (d.trace_distance > best.trace_distance) {
            best = d;
        }
    }
    return best;
}

namespace {

ZStatistics z_statistics(const Statevector& state, std::size_t shots, std::uint64_t seed) {
    ZStatistics stats;
    stats.p0_exact = state.probability(0, Basis::Z, 0);
    stats.shots = shots;
    Rng rng(seed);
    for (std::size_t k = 0; k < shots; ++k) {
        Statevector copy = state;
        if (copy.measure(0, Basis::Z, Sample{rng.next()}).outcome == 0) {
            ++stats.zeros;
        }
    }
    return stats;
}

std::vector<std::uint64_t> chain_shares(const ShareConfig& config) { return config.shares; }

} // namespace

CombinerAttackResult combiner_fake_attack(const ShareConfig& config, std::span<const double> masks,
                                          std::span<const int> fake_bits, const Statevector& secret,
                                          std::size_t shots, std::uint64_t seed) {
    config.validate();
    const std::size_t rounds = config.n() - 1;
    if (masks.size() != rounds || fake_bits.size() != rounds) {
        throw Error(ErrorKind::DimensionError, "need one mask and one fake bit per shareholder");
    }
    const AngleSet angles = derive_angles(config);
    const auto shares = chain_shares(config);

    CombinerAttackResult out;
    out.report.scenario = "combiner-fake";
    for (std::size_t i = 0; i < rounds; ++i) {
        const int fake = fake_bits[i];
        if (fake != 0 && fake != 1) {
            throw Error(ErrorKind::DimensionError, "fake results must be bits");
        }
        // The honest shareholder answers the fake bit as if it were real.
        const double theta = shareholder_respond(fake, masks[i], angles.phi[i]);
        Statevector omega = shareholder_prepare(masks[i]);
        if (fake) {
            omega.apply_1q(Gate::x(), 0);
        }
        omega.apply_1q(Gate::rz(theta), 0);

        out.report.stripped_fidelities.push_back(fidelity_up_to_phase(omega, rotated_plus(angles.phi[i])));
        out.report.z_statistics.push_back(z_statistics(omega, shots, derive_seed(seed, i)));
        const auto d = share_distinguishability(shares[i], config.s, config.q);
        out.report.trace_distances.push_back(d.trace_distance);
        out.report.guess_probabilities.push_back(d.guess_probability);
        out.stripped.push_back(std::move(omega));
    }
    // Without phi_A the combiner's best stand-in for psi is |Psi> itself.
    out.report.best_guess_fidelity = fidelity_up_to_phase(dealer_encrypt(secret, angles.phi_A), secret);
    return out;
}

LeakageReport collusion_one(const ShareConfig& config, const Statevector& psi) {
    const AngleSet angles = derive_angles(config);
    double pooled = angles.phi_A;
    for (double p : angles.phi) {
        pooled += p;
    }
    Statevector guess = psi;
    guess.apply_1q(Gate::rx(pooled), 0);

    LeakageReport report;
    report.scenario = "collusion-1";
    report.best_guess_fidelity = fidelity_up_to_phase(guess, psi);
    // The combiner's share stays hidden behind phi_C; report how well phi_C
    // could be singled out from one copy of R_Z(phi_C)|+>.
    const auto d = share_distinguishability(config.k_C, config.s, config.q);
    report.trace_distances.push_back(d.trace_distance);
    report.guess_probabilities.push_back(d.guess_probability);
    return report;
}

ShareConfig collapse_to_three_party(const ShareConfig& config, std::size_t honest) {
    config.validate();
    if (honest == 0 || honest > config.n() - 1) {
        throw Error(ErrorKind::IndexError, "honest shareholder " + std::to_string(honest) + " out of range");
    }
    std::uint64_t merged = config.k_C;
    for (std::size_t i = 1; i <= config.shares.size(); ++i) {
        if (i != honest) {
            merged = add_mod(merged, config.shares[i - 1], config.q);
        }
    }
    ShareConfig out{config.q, config.k_A, {config.shares[honest - 1]}, merged, config.s};
    out.validate();
    return out;
}

LeakageReport collusion_two(const ShareConfig& config, std::span<const double> masks, std::size_t honest,
                            const Statevector& secret, std::size_t shots, std::uint64_t seed) {
    const ShareConfig reduced = collapse_to_three_party(config, honest);
    if (masks.size() != config.n() - 1) {
        throw Error(ErrorKind::DimensionError, "need one mask per shareholder");
    }
    const double honest_mask[] = {masks[honest - 1]};
    // Either fake bit strips the mask; use 1 so the X branch is exercised.
    const int fake[] = {1};
    auto result = combiner_fake_attack(reduced, honest_mask, fake, secret, shots, seed);
    result.report.scenario = "collusion-2";
    return result.report;
}

double external_abort_rate(std::size_t decoys, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw Error(ErrorKind::InvalidArity, "need at least one trial");
    }
    std::size_t aborts = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, t);
        Rng rng(trial_seed);
        const Statevector payload = rotated_plus(rng.uniform() * kTwoPi);
        Dispatch d = send_with_decoys(payload, decoys, derive_seed(trial_seed, "send"));
        d.transmission = eavesdrop_intercept_resend(std::move(d.transmission), derive_seed(trial_seed, "eve"));
        if (detect(d.transmission, d.record, 0.0, derive_seed(trial_seed, "detect")).verdict == Verdict::Abort) {
            ++aborts;
        }
    }
    return static_cast<double>(aborts) / static_cast<double>(trials);
}

} // namespace qsr
