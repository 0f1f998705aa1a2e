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

#include <nlohmann/json.hpp>

#include "qsr/analysis.hpp"
#include "qsr/attacks.hpp"
#include "qsr/protocol.hpp"
#include "qsr/statevec.hpp"

namespace qsr {

using Json = nlohmann::ordered_json;

/// [[re, im], ...] per amplitude.
Json amplitudes_json(const Statevector& state);
Statevector amplitudes_from_json(const Json& j);

Json to_json(const ChannelReport& report);
Json to_json(const Announcement& a);
Json to_json(const Transcript& t);
Json to_json(const LeakageReport& r);
Json to_json(const Histogram& h);
Json to_json(const std::vector<CostRow>& rows);
Json to_json(const std::vector<TraceRow>& rows);

/// "s", "m" or "theta".
std::string announcement_tag(AnnouncementKind kind);

} // namespace qsr
