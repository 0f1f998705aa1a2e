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

#include "qsr/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsr/acceptance.hpp"
#include "qsr/analysis.hpp"
#include "qsr/channel.hpp"
#include "qsr/error.hpp"
#include "qsr/rng.hpp"
#include "qsr/shares.hpp"

namespace qsr::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ConfigError, what); }

std::uint64_t get_uint(const Json& doc, const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        bad(std::string("'") + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::uint64_t get_uint(const Json& doc, const char* key, std::uint64_t fallback) {
    return doc.contains(key) ? get_uint(doc, key) : fallback;
}

std::vector<std::uint64_t> get_uint_list(const Json& doc, const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_array()) {
        bad(std::string("'") + key + "' must be a list of integers");
    }
    std::vector<std::uint64_t> out;
    for (const auto& x : v) {
        if (!x.is_number_unsigned()) {
            bad(std::string("'") + key + "' must be a list of non-negative integers");
        }
        out.push_back(x.get<std::uint64_t>());
    }
    return out;
}

Statevector example_secret() { return Statevector::from_amplitudes({0.5, std::sqrt(3.0) / 2.0}); }

Statevector parse_secret(const Json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "paper-example") {
            return example_secret();
        }
        bad("unknown secret preset '" + v.get<std::string>() + "'");
    }
    try {
        const Statevector s = amplitudes_from_json(v);
        if (s.num_qubits() != 1) {
            bad("secret must be a single qubit");
        }
        return s;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ConfigError) {
            throw;
        }
        bad(std::string("secret: ") + e.what());
    }
}

std::vector<double> draw_masks(std::uint64_t seed, std::size_t count) {
    Rng rng(derive_seed(seed, "attack-masks"));
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(rng.uniform() * kTwoPi);
    }
    return out;
}

AttackSpec parse_attack(const Json& v, std::size_t n) {
    if (!v.is_object() || !v.contains("kind") || !v["kind"].is_string()) {
        bad("'attack' must be an object with a 'kind'");
    }
    const std::string kind = v["kind"].get<std::string>();
    AttackSpec spec;
    if (kind == "external") {
        spec.scenario.kind = AttackKind::ExternalInterceptResend;
    } else if (kind == "combiner-fake") {
        spec.scenario.kind = AttackKind::CombinerFakeResults;
        if (v.contains("fake_bits")) {
            for (auto b : get_uint_list(v, "fake_bits")) {
                if (b > 1) {
                    bad("'fake_bits' must hold bits");
                }
                spec.scenario.fake_bits.push_back(static_cast<int>(b));
            }
            if (spec.scenario.fake_bits.size() != n - 1) {
                bad("'fake_bits' needs n-1 entries");
            }
        } else {
            spec.scenario.fake_bits.assign(n - 1, 1);
        }
    } else if (kind == "collusion-1") {
        spec.scenario.kind = AttackKind::CollusionI;
    } else if (kind == "collusion-2") {
        spec.scenario.kind = AttackKind::CollusionII;
        spec.scenario.honest_index = get_uint(v, "honest", 1);
    } else {
        bad("unknown attack kind '" + kind + "'");
    }
    return spec;
}

ShareConfig parse_shares(const Json& doc, std::size_t n, std::uint64_t q, std::uint64_t seed) {
    check_modulus(q);
    std::uint64_t k_A = 0;
    const bool random_secret = doc.contains("k_A") && doc["k_A"].is_string();
    if (random_secret) {
        if (doc["k_A"].get<std::string>() != "random") {
            bad("'k_A' must be an integer or \"random\"");
        }
        k_A = Rng(derive_seed(seed, "k_A")).below(q);
    } else {
        k_A = get_uint(doc, "k_A", 0);
    }
    if (doc.contains("shares")) {
        auto shares = get_uint_list(doc, "shares");
        if (shares.size() != n - 1) {
            bad("'shares' needs n-1 entries");
        }
        return complete_shares(k_A, std::move(shares), q, get_uint(doc, "s", 1));
    }
    ShareConfig cfg = split_secret(k_A, n, q, derive_seed(seed, "shares"));
    if (doc.contains("s")) {
        cfg.s = get_uint(doc, "s");
    }
    cfg.validate();
    return cfg;
}

Json attach_config(Json transcript, const Json& raw) {
    transcript["config"] = raw;
    return transcript;
}

LeakageReport run_attack(const AttackScenario& scenario, const ProtocolInput& input, std::size_t shots,
                         Transcript* transcript) {
    const std::size_t rounds = input.shares.n() - 1;
    const std::vector<double> masks = input.masks.empty() ? draw_masks(input.seed, rounds) : input.masks;
    switch (scenario.kind) {
    case AttackKind::ExternalInterceptResend: {
        ProtocolInput attacked = input;
        attacked.eavesdropper = eavesdrop_intercept_resend;
        Transcript t = run_protocol(attacked);
        LeakageReport r;
        r.scenario = scenario.name();
        for (const auto& l : t.channel_reports) {
            r.detection.push_back(l.report);
        }
        if (t.recovered) {
            r.best_guess_fidelity = t.fidelity;
        }
        if (transcript) {
            *transcript = std::move(t);
        }
        return r;
    }
    case AttackKind::CombinerFakeResults:
        return combiner_fake_attack(input.shares, masks, scenario.fake_bits, input.secret, shots, input.seed).report;
    case AttackKind::CollusionI:
        return collusion_one(input.shares, input.secret);
    case AttackKind::CollusionII:
        return collusion_two(input.shares, masks, scenario.honest_index, input.secret, shots, input.seed);
    }
    bad("unknown attack");
}

std::string fmt_amp(Complex c) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << std::showpos << c.real() << c.imag() << 'i';
    return os.str();
}

RunConfig example_run_config() {
    Json doc = Json::parse(R"({"n":3,"q":3,"k_A":2,"shares":[1,2],"s":1,"secret":"paper-example",
                               "seed":1,"outcomes":[0,1],"masks":[0.5235987755982988,3.141592653589793]})");
    return parse_run_config(doc);
}

int cmd_run(const std::string& config_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
    std::ifstream in(config_path);
    if (!in) {
        err << "error: cannot read config '" << config_path << "'\n";
        return kExitUsage;
    }
    RunConfig config;
    try {
        config = parse_run_config(Json::parse(in));
    } catch (const Json::exception& e) {
        err << "error: ConfigError: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    int status = kExitOk;
    Json doc;
    try {
        doc = execute(config, status);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::ofstream o(out_path, std::ios::binary);
    if (!o) {
        err << "error: cannot write '" << out_path << "'\n";
        return kExitUsage;
    }
    o << doc.dump(2) << '\n';

    const Json& summary = doc.contains("runs") ? doc["runs"].back() : doc;
    if (doc.contains("runs")) {
        for (const auto& r : doc["runs"]) {
            out << "fidelity: " << (r["fidelity"].is_null() ? std::string("n/a") : std::to_string(r["fidelity"].get<double>()))
                << "  verdict: " << r["verdict"].get<std::string>() << '\n';
        }
    } else {
        out << "fidelity: "
            << (summary["fidelity"].is_null() ? std::string("n/a") : std::to_string(summary["fidelity"].get<double>()))
            << '\n'
            << "verdict: " << summary["verdict"].get<std::string>() << '\n';
    }
    return status;
}

int report_example(bool json, std::ostream& out) {
    const auto rows = trace_run(worked_example());
    if (json) {
        out << to_json(rows).dump(2) << '\n';
        return kExitOk;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << r + 1 << ". " << rows[r].stage << '\n';
        const auto& s = rows[r].state;
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            if (std::abs(s[i]) < 1e-12) {
                continue;
            }
            // Basis label printed particle A first.
            std::string label;
            for (std::size_t q = 0; q < s.num_qubits(); ++q) {
                label += ((i >> q) & 1) ? '1' : '0';
            }
            out << "   |" << label << ">  " << fmt_amp(s[i]) << '\n';
        }
    }
    return kExitOk;
}

int report_experiment(std::size_t shots, std::uint64_t seed, bool json, std::ostream& out) {
    const Histogram h = run_experiment(shots, seed);
    if (json) {
        out << to_json(h).dump(2) << '\n';
        return kExitOk;
    }
    out << "c2c1c0  count\n";
    for (const auto& [key, count] : h) {
        out << key << "     " << std::setw(6) << count << '\n';
    }
    out << "c2=1 branch amplitude: " << experiment_c2_leak() << '\n';
    return kExitOk;
}

int report_cost(const CostModel& model, bool json, std::ostream& out) {
    const auto rows = comparison_table(model);
    if (json) {
        out << to_json(rows).dump(2) << '\n';
        return kExitOk;
    }
    out << std::left << std::setw(14) << "scheme" << std::setw(12) << "DC" << std::setw(22) << "CC" << "reuse\n";
    for (const auto& r : rows) {
        out << std::setw(14) << r.scheme << std::setw(12) << r.distribution_class << std::setw(22)
            << r.computation_class << (r.share_reuse ? "Yes" : "No") << '\n';
    }
    const auto& p = rows.front();
    out << std::right << "\nproposed, n=" << model.n << " |q|=" << model.q_bits << " m=" << model.m << ":\n"
        << "  DC = " << *p.distribution_bits << " bits/state\n"
        << "  additions per state = " << p.computation->additions_per_state << '\n'
        << "  multiplications per angle = " << p.computation->multiplications_per_angle << '\n';
    return kExitOk;
}

int report_attacks(const std::string& config_path, std::size_t shots, bool json, std::ostream& out,
                   std::ostream& err) {
    RunConfig config;
    try {
        if (config_path.empty()) {
            config = example_run_config();
        } else {
            std::ifstream in(config_path);
            if (!in) {
                err << "error: cannot read config '" << config_path << "'\n";
                return kExitUsage;
            }
            config = parse_run_config(Json::parse(in));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const std::size_t rounds = config.input.shares.n() - 1;
    std::vector<AttackScenario> scenarios{{AttackKind::ExternalInterceptResend, {}, 1},
                                          {AttackKind::CombinerFakeResults, std::vector<int>(rounds, 1), 1},
                                          {AttackKind::CollusionI, {}, 1},
                                          {AttackKind::CollusionII, {}, 1}};
    Json all = Json::array();
    for (const auto& s : scenarios) {
        all.push_back(to_json(run_attack(s, config.input, shots, nullptr)));
    }
    if (json) {
        out << all.dump(2) << '\n';
        return kExitOk;
    }
    for (const auto& r : all) {
        out << r["scenario"].get<std::string>() << '\n';
        for (auto it = r.begin(); it != r.end(); ++it) {
            if (it.key() != "scenario") {
                out << "  " << it.key() << ": " << it.value().dump() << '\n';
            }
        }
    }
    return kExitOk;
}

int cmd_selftest(const std::string& fault, std::ostream& out, std::ostream& err) {
    acceptance::Options opt;
    if (fault == "sign-flip") {
        opt.fault = acceptance::Fault::SignFlip;
    } else if (!fault.empty()) {
        err << "error: unknown fault '" << fault << "'\n";
        return kExitUsage;
    }
    const auto start = std::chrono::steady_clock::now();
    const auto results = acceptance::run_all(opt);
    const bool ok = acceptance::report(results, out);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "total " << std::fixed << std::setprecision(2) << secs << " s\n" << std::defaultfloat;
    return ok && secs < 120.0 ? kExitOk : kExitUsage;
}

} // namespace

RunConfig parse_run_config(const Json& doc) {
    if (!doc.is_object()) {
        bad("config must be a JSON object");
    }
    for (const char* key : {"n", "q"}) {
        if (!doc.contains(key)) {
            bad(std::string("missing '") + key + "'");
        }
    }
    RunConfig cfg;
    cfg.raw = doc;
    const std::size_t n = get_uint(doc, "n");
    if (n < 2) {
        throw Error(ErrorKind::InvalidArity, "n must be at least 2");
    }
    const std::uint64_t q = get_uint(doc, "q");
    const std::uint64_t seed = get_uint(doc, "seed", 0);

    ProtocolInput& in = cfg.input;
    in.seed = seed;
    in.shares = parse_shares(doc, n, q, seed);
    in.secret = doc.contains("secret") ? parse_secret(doc["secret"]) : example_secret();
    in.channel.decoys = get_uint(doc, "decoys", in.channel.decoys);
    if (doc.contains("threshold")) {
        if (!doc["threshold"].is_number() || doc["threshold"].get<double>() < 0.0) {
            bad("'threshold' must be a non-negative number");
        }
        in.channel.threshold = doc["threshold"].get<double>();
    }
    if (doc.contains("outcomes")) {
        const auto& o = doc["outcomes"];
        if (o.is_string()) {
            if (o.get<std::string>() != "sample") {
                bad("'outcomes' must be \"sample\" or a bit list");
            }
        } else {
            for (auto b : get_uint_list(doc, "outcomes")) {
                if (b > 1) {
                    bad("'outcomes' must hold bits");
                }
                in.forced_outcomes.push_back(static_cast<int>(b));
            }
            if (in.forced_outcomes.size() != n - 1) {
                bad("'outcomes' needs n-1 bits");
            }
        }
    }
    if (doc.contains("masks")) {
        const auto& m = doc["masks"];
        if (!m.is_array() || m.size() != n - 1) {
            bad("'masks' needs n-1 angles");
        }
        for (const auto& x : m) {
            if (!x.is_number()) {
                bad("'masks' must hold numbers");
            }
            in.masks.push_back(x.get<double>());
        }
    }
    in.combiner_agent = get_uint(doc, "combiner", 0);
    if (in.combiner_agent > n) {
        throw Error(ErrorKind::IndexError, "combiner must be an agent 1..n");
    }
    if (doc.contains("engine")) {
        const std::string e = doc["engine"].is_string() ? doc["engine"].get<std::string>() : "";
        if (e == "lazy") {
            in.engine = Engine::Lazy;
        } else if (e == "eager") {
            in.engine = Engine::Eager;
        } else {
            bad("'engine' must be \"lazy\" or \"eager\"");
        }
    }
    if (doc.contains("attack")) {
        cfg.attack = parse_attack(doc["attack"], n);
        if (cfg.attack->scenario.kind == AttackKind::CollusionII) {
            collapse_to_three_party(in.shares, cfg.attack->scenario.honest_index);
        }
    }
    if (doc.contains("qmss")) {
        const auto& m = doc["qmss"];
        if (!m.is_object()) {
            bad("'qmss' must be an object");
        }
        QmssSpec spec;
        spec.w = get_uint(m, "w");
        if (m.contains("randomizers")) {
            spec.randomizers = get_uint_list(m, "randomizers");
        } else {
            for (std::size_t j = 0; j < spec.w; ++j) {
                spec.randomizers.push_back(1 + j % (q - 1));
            }
        }
        if (m.contains("secrets")) {
            if (!m["secrets"].is_array()) {
                bad("'qmss.secrets' must be a list");
            }
            for (const auto& s : m["secrets"]) {
                spec.secrets.push_back(parse_secret(s));
            }
        } else {
            spec.secrets.assign(spec.w, in.secret);
        }
        if (spec.randomizers.size() != spec.w || spec.secrets.size() != spec.w) {
            bad("'qmss' needs w randomizers and w secrets");
        }
        cfg.qmss = std::move(spec);
    }
    return cfg;
}

Json execute(const RunConfig& config, int& status) {
    if (config.qmss) {
        MultiSecretInput in;
        in.shares = config.input.shares;
        in.secrets = config.qmss->secrets;
        in.randomizers = config.qmss->randomizers;
        in.channel = config.input.channel;
        for (std::size_t j = 0; j < config.qmss->w; ++j) {
            in.seeds.push_back(derive_seed(config.input.seed, j));
        }
        Json runs = Json::array();
        status = kExitOk;
        for (const auto& t : run_multi_secret(in)) {
            if (t.status != RunStatus::Recovered) {
                status = kExitAborted;
            }
            runs.push_back(to_json(t));
        }
        return Json{{"config", config.raw}, {"runs", std::move(runs)}};
    }

    Transcript t;
    std::optional<LeakageReport> leak;
    if (config.attack && config.attack->scenario.kind == AttackKind::ExternalInterceptResend) {
        leak = run_attack(config.attack->scenario, config.input, 0, &t);
    } else {
        t = run_protocol(config.input);
        if (config.attack) {
            leak = run_attack(config.attack->scenario, config.input, 1000, nullptr);
        }
    }
    status = t.status == RunStatus::Recovered ? kExitOk : kExitAborted;
    Json doc = attach_config(to_json(t), config.raw);
    if (leak) {
        doc["attack_report"] = to_json(*leak);
    }
    return doc;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum secret reconstruction simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    auto* run = app.add_subcommand("run", "Run the reconstruction protocol from a JSON config");
    run->add_option("--config", config_path, "Config file")->required();
    run->add_option("--out", out_path, "Transcript output file")->required();

    std::string kind;
    std::size_t n = 3;
    std::size_t q_bits = 2;
    std::size_t m = 1;
    std::size_t shots = 5000;
    std::uint64_t seed = 1;
    bool json = false;
    std::string attack_config;
    auto* report = app.add_subcommand("report", "Print the example trace, experiment, cost table or attacks");
    report->add_option("kind", kind, "example | experiment | cost | attacks")->required();
    report->add_option("--n", n, "Reconstructing agents");
    report->add_option("--q-bits", q_bits, "Bits per share");
    report->add_option("--m", m, "Shared states");
    report->add_option("--shots", shots, "Experiment shots");
    report->add_option("--seed", seed, "Seed");
    report->add_option("--config", attack_config, "Config for the attacks report");
    report->add_flag("--json", json, "Emit JSON");

    std::string fault;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_option("--inject-fault", fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*run) {
        return cmd_run(config_path, out_path, out, err);
    }
    if (*report) {
        try {
            if (kind == "example") {
                return report_example(json, out);
            }
            if (kind == "experiment") {
                return report_experiment(shots, seed, json, out);
            }
            if (kind == "cost") {
                return report_cost(CostModel{n, m, q_bits}, json, out);
            }
            if (kind == "attacks") {
                return report_attacks(attack_config, shots, json, out, err);
            }
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        err << "error: unknown report kind '" << kind << "'\n";
        return kExitUsage;
    }
    return cmd_selftest(fault, out, err);
}

} // namespace qsr::cli
