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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsr/channel.hpp"
#include "qsr/shares.hpp"
#include "qsr/statevec.hpp"

namespace qsr {

enum class AttackKind { ExternalInterceptResend, CombinerFakeResults, CollusionI, CollusionII };

struct AttackScenario {
    AttackKind kind = AttackKind::ExternalInterceptResend;
    /// CombinerFakeResults: one fake bit per shareholder.
    std::vector<int> fake_bits;
    /// CollusionII: the single honest shareholder, 1..n-1.
    std::size_t honest_index = 1;

    /// "external", "combiner-fake", "collusion-1" or "collusion-2".
    [[nodiscard]] std::string name() const;
};

struct Distinguishability {
    double trace_distance;
    double guess_probability;
};

/// Z-basis statistics of one stripped state.
struct ZStatistics {
    double p0_exact = 0.0;
    std::size_t shots = 0;
    std::size_t zeros = 0;
};

struct LeakageReport {
    std::string scenario;
    /// Per attacked shareholder: best single-copy trace distance between the
    /// state for its true share and the state for any other share value.
    std::vector<double> trace_distances;
    std::vector<double> guess_probabilities;
    /// Fidelity of the stripped states with R_Z(phi_i)|+>.
    std::vector<double> stripped_fidelities;
    std::vector<ZStatistics> z_statistics;
    /// |<psi|adversary's best state>|^2 when the scenario yields one.
    std::optional<double> best_guess_fidelity;
    std::vector<ChannelReport> detection;
};

/// Trace distance of |+_phi> and |+_phi'> from the eigenvalues of the
/// density-matrix difference, and the Helstrom guess probability (1+TD)/2.
Distinguishability helstrom_distinguishability(double phi, double phi_prime);

/// Best pairwise distinguishability of the share k against every other
/// value in Z_q under randomizer s.
Distinguishability share_distinguishability(std::uint64_t k, std::uint64_t s, std::uint64_t q);

struct CombinerAttackResult {
    std::vector<Statevector> stripped;
    LeakageReport report;
};

/// The combiner announces fake bits, shareholder i answers
/// theta'_i = (-1)^(m'_i+1) omega_i + phi_i, and the combiner applies
/// R_Z(theta'_i) X^m'_i to |Omega_i>, leaving R_Z(phi_i)|+>.
CombinerAttackResult combiner_fake_attack(const ShareConfig& config, std::span<const double> masks,
                                          std::span<const int> fake_bits, const Statevector& secret,
                                          std::size_t shots, std::uint64_t seed);

/// All shareholders pool phi_A + sum phi_i on the intercepted |Psi>.
LeakageReport collusion_one(const ShareConfig& config, const Statevector& psi);

/// Combiner plus every shareholder except `honest` (1..n-1): their shares are
/// merged into the combiner and the fake-result attack is run on the
/// resulting three-party instance.
LeakageReport collusion_two(const ShareConfig& config, std::span<const double> masks, std::size_t honest,
                            const Statevector& secret, std::size_t shots, std::uint64_t seed);

/// Three-party config (dealer, shareholder `honest`, merged combiner).
ShareConfig collapse_to_three_party(const ShareConfig& config, std::size_t honest);

/// Fraction of `trials` transmissions with `decoys` decoys that intercept-resend
/// gets caught on (threshold 0).
double external_abort_rate(std::size_t decoys, std::size_t trials, std::uint64_t seed);

} // namespace qsr
