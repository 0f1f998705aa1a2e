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

#include "qsr/serialize.hpp"

#include "qsr/error.hpp"

namespace qsr {

Json amplitudes_json(const Statevector& state) {
    Json out = Json::array();
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        out.push_back(Json::array({state[i].real(), state[i].imag()}));
    }
    return out;
}

Statevector amplitudes_from_json(const Json& j) {
    if (!j.is_array()) {
        throw Error(ErrorKind::ConfigError, "amplitudes must be an array of [re, im] pairs");
    }
    std::vector<Complex> amps;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw Error(ErrorKind::ConfigError, "amplitude entries must be [re, im]");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    try {
        return Statevector::from_amplitudes(std::move(amps));
    } catch (const Error& e) {
        throw Error(ErrorKind::ConfigError, e.what());
    }
}

std::string announcement_tag(AnnouncementKind kind) {
    switch (kind) {
    case AnnouncementKind::RandomizerS: return "s";
    case AnnouncementKind::MeasurementResult: return "m";
    case AnnouncementKind::RotationAngle: return "theta";
    }
    return "?";
}

Json to_json(const ChannelReport& report) {
    return Json{{"decoys_checked", report.decoys_checked},
                {"errors", report.errors},
                {"error_rate", report.error_rate},
                {"verdict", std::string(to_string(report.verdict))}};
}

Json to_json(const Announcement& a) {
    Json j{{"seq", a.seq}, {"kind", announcement_tag(a.kind)}, {"party", a.sender.name()}};
    if (a.kind == AnnouncementKind::RotationAngle) {
        j["value"] = a.value;
    } else {
        j["value"] = static_cast<std::uint64_t>(a.value);
    }
    if (a.kind != AnnouncementKind::RandomizerS) {
        j["round"] = a.subject;
    }
    return j;
}

Json to_json(const Transcript& t) {
    Json j;
    j["config"] = Json{{"n", t.config.n},
                       {"q", t.config.q},
                       {"s", t.config.s},
                       {"seed", t.config.seed},
                       {"decoys", t.config.decoys},
                       {"threshold", t.config.threshold},
                       {"combiner", t.config.combiner_agent},
                       {"engine", t.config.engine}};
    Json ann = Json::array();
    for (const auto& a : t.announcements) {
        ann.push_back(to_json(a));
    }
    j["announcements"] = std::move(ann);
    Json links = Json::array();
    for (const auto& l : t.channel_reports) {
        Json r{{"link", l.link}};
        r.update(to_json(l.report));
        links.push_back(std::move(r));
    }
    j["channel_reports"] = std::move(links);
    j["counters"] = Json{{"add", t.counters.additions}, {"mul", t.counters.multiplications}};
    j["recovered"] = t.recovered ? amplitudes_json(*t.recovered) : Json(nullptr);
    j["fidelity"] = t.fidelity ? Json(*t.fidelity) : Json(nullptr);
    j["verdict"] = t.verdict();
    return j;
}

Json to_json(const LeakageReport& r) {
    Json j{{"scenario", r.scenario},
           {"trace_distances", r.trace_distances},
           {"guess_probabilities", r.guess_probabilities},
           {"stripped_fidelities", r.stripped_fidelities}};
    Json z = Json::array();
    for (const auto& s : r.z_statistics) {
        z.push_back(Json{{"p0_exact", s.p0_exact}, {"shots", s.shots}, {"zeros", s.zeros}});
    }
    j["z_statistics"] = std::move(z);
    j["best_guess_fidelity"] = r.best_guess_fidelity ? Json(*r.best_guess_fidelity) : Json(nullptr);
    Json det = Json::array();
    for (const auto& d : r.detection) {
        det.push_back(to_json(d));
    }
    j["detection"] = std::move(det);
    return j;
}

Json to_json(const Histogram& h) {
    Json j = Json::object();
    for (const auto& [key, count] : h) {
        j[key] = count;
    }
    return j;
}

Json to_json(const std::vector<CostRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j{{"scheme", r.scheme},
               {"distribution", r.distribution_class},
               {"computation", r.computation_class},
               {"share_reuse", r.share_reuse}};
        if (r.distribution_bits) {
            j["distribution_bits"] = *r.distribution_bits;
        }
        if (r.computation) {
            j["additions_per_state"] = r.computation->additions_per_state;
            j["multiplications_per_angle"] = r.computation->multiplications_per_angle;
            j["total_additions"] = r.computation->total_additions;
            j["total_multiplications"] = r.computation->total_multiplications;
        }
        out.push_back(std::move(j));
    }
    return out;
}

Json to_json(const std::vector<TraceRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        out.push_back(Json{{"stage", r.stage}, {"state", amplitudes_json(r.state)}});
    }
    return out;
}

} // namespace qsr
