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
#include <string_view>
#include <vector>

#include "qsr/statevec.hpp"

namespace qsr {

/// Qubits in flight. Carries no labels: an eavesdropper sees only states.
struct Transmission {
    std::vector<Statevector> slots;
    std::uint64_t permutation_seed = 0;
};

struct DecoyRecord {
    std::size_t slot;
    Basis basis;
    int bit;
};

/// Kept by the sender; disclosed to the receiver only at detection time.
struct PreparationRecord {
    std::size_t slot_count = 0;
    std::size_t payload_slot = 0;
    std::vector<DecoyRecord> decoys;
};

struct Dispatch {
    Transmission transmission;
    PreparationRecord record;
};

/// Interleaves `decoy_count` BB84 decoys (uniform over |0>,|1>,|+>,|->) with
/// the payload at a seed-chosen position.
Dispatch send_with_decoys(const Statevector& payload, std::size_t decoy_count, std::uint64_t seed);

/// Measures every slot in a uniformly random Z/X basis and resends the outcome state.
Transmission eavesdrop_intercept_resend(Transmission transmission, std::uint64_t seed);

using Eavesdropper = std::function<Transmission(Transmission, std::uint64_t)>;

enum class Verdict { Clean, Abort };

constexpr std::string_view to_string(Verdict v) noexcept { return v == Verdict::Clean ? "Clean" : "Abort"; }

struct ChannelReport {
    std::size_t decoys_checked = 0;
    std::size_t errors = 0;
    double error_rate = 0.0;
    Verdict verdict = Verdict::Clean;
};

/// Measures each decoy in its preparation basis; the payload slot is left
/// alone. Abort iff error_rate > threshold. ProtocolViolation when the record
/// does not describe this transmission.
ChannelReport detect(const Transmission& transmission, const PreparationRecord& record, double threshold,
                     std::uint64_t seed);

/// The payload slot as received.
const Statevector& received_payload(const Transmission& transmission, const PreparationRecord& record);

struct ChannelSettings {
    std::size_t decoys = 16;
    double threshold = 0.0;
};

} // namespace qsr
