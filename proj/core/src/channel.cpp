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

#include "qsr/channel.hpp"

#include "qsr/error.hpp"
#include "qsr/rng.hpp"

namespace qsr {

Dispatch send_with_decoys(const Statevector& payload, std::size_t decoy_count, std::uint64_t seed) {
    if (payload.num_qubits() != 1) {
        throw Error(ErrorKind::DimensionError, "payload must be a single qubit");
    }
    Rng rng(derive_seed(seed, "decoys"));
    Dispatch out;
    out.transmission.permutation_seed = seed;
    out.record.slot_count = decoy_count + 1;
    out.record.payload_slot = rng.below(decoy_count + 1);
    for (std::size_t slot = 0; slot <= decoy_count; ++slot) {
        if (slot == out.record.payload_slot) {
            out.transmission.slots.push_back(payload);
            continue;
        }
        const Basis basis = rng.bit() ? Basis::X : Basis::Z;
        const int bit = rng.bit();
        out.transmission.slots.push_back(basis_state(basis, bit));
        out.record.decoys.push_back({slot, basis, bit});
    }
    return out;
}

Transmission eavesdrop_intercept_resend(Transmission transmission, std::uint64_t seed) {
    Rng rng(derive_seed(seed, "intercept-resend"));
    for (auto& slot : transmission.slots) {
        const Basis basis = rng.bit() ? Basis::X : Basis::Z;
        const Measurement m = slot.measure(0, basis, Sample{rng.next()});
        slot = basis_state(basis, m.outcome);
    }
    return transmission;
}

ChannelReport detect(const Transmission& transmission, const PreparationRecord& record, double threshold,
                     std::uint64_t seed) {
    if (record.slot_count != transmission.slots.size() || record.payload_slot >= record.slot_count ||
        record.decoys.size() + 1 != record.slot_count) {
        throw Error(ErrorKind::ProtocolViolation, "preparation record does not match the transmission");
    }
    Rng rng(derive_seed(seed, "detect"));
    ChannelReport report;
    for (const auto& decoy : record.decoys) {
        if (decoy.slot >= transmission.slots.size() || decoy.slot == record.payload_slot) {
            throw Error(ErrorKind::ProtocolViolation, "decoy record points at an invalid slot");
        }
        Statevector probe = transmission.slots[decoy.slot];
        const Measurement m = probe.measure(0, decoy.basis, Sample{rng.next()});
        ++report.decoys_checked;
        if (m.outcome != decoy.bit) {
            ++report.errors;
        }
    }
    if (report.decoys_checked > 0) {
        report.error_rate = static_cast<double>(report.errors) / static_cast<double>(report.decoys_checked);
    }
    report.verdict = report.error_rate > threshold ? Verdict::Abort : Verdict::Clean;
    return report;
}

const Statevector& received_payload(const Transmission& transmission, const PreparationRecord& record) {
    if (record.payload_slot >= transmission.slots.size()) {
        throw Error(ErrorKind::ProtocolViolation, "payload slot out of range");
    }
    return transmission.slots[record.payload_slot];
}

} // namespace qsr
