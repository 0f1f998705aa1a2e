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

#include "qsr/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "oracle.hpp"
#include "qsr/analysis.hpp"
#include "qsr/attacks.hpp"
#include "qsr/channel.hpp"
#include "qsr/cluster.hpp"
#include "qsr/protocol.hpp"
#include "qsr/rng.hpp"
#include "qsr/shares.hpp"
#include "qsr/statevec.hpp"

namespace qsr::acceptance {

namespace {

constexpr std::array<std::uint64_t, 4> kSmallPrimes{3, 5, 7, 11};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(3) << v;
    return os.str();
}

ResponseRule response_rule(Fault fault) {
    if (fault == Fault::SignFlip) {
        return [](int m, double omega, double phi) { return shareholder_respond(1 - m, omega, phi); };
    }
    return shareholder_respond;
}

Statevector random_qubit(Rng& rng) {
    const double polar = std::acos(1.0 - 2.0 * rng.uniform());
    const double azimuth = kTwoPi * rng.uniform();
    return Statevector::from_amplitudes(
        {Complex(std::cos(polar / 2.0), 0.0), std::polar(std::sin(polar / 2.0), azimuth)});
}

/// Random qubit kept away from the X axis of the Bloch sphere.
Statevector generic_qubit(Rng& rng) {
    for (;;) {
        Statevector s = random_qubit(rng);
        const double px = s.probability(0, Basis::X, 0);
        if (px > 1e-3 && px < 1.0 - 1e-3) {
            return s;
        }
    }
}

oracle::Vec to_oracle(const Statevector& s) {
    oracle::Vec v;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        v.push_back(s[i]);
    }
    return v;
}

std::uint64_t random_prime(Rng& rng) { return kSmallPrimes[rng.below(kSmallPrimes.size())]; }

ShareConfig random_config(Rng& rng, std::size_t n, std::uint64_t q) {
    return split_secret(rng.below(q), n, q, rng.next());
}

using Check = std::function<std::pair<bool, std::string>(Rng&, const Options&)>;

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    Check check;
};

std::pair<bool, std::string> worked_example_replay(Rng&, const Options& opt) {
    const auto rows = trace_run(worked_example(), response_rule(opt.fault));
    const auto expected = oracle::worked_example_rows();
    if (rows.size() != expected.size()) {
        return {false, "trace has " + std::to_string(rows.size()) + " rows"};
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto want = Statevector::from_amplitudes(oracle::to_lsb(expected[r]));
        worst = std::max(worst, max_amplitude_diff(rows[r].state, want));
    }
    return {worst < 1e-9, "7 rows, max amplitude deviation " + fmt(worst)};
}

std::pair<bool, std::string> end_to_end(Rng& rng, const Options& opt) {
    double worst = 1.0;
    std::size_t failures = 0;
    for (int run = 0; run < 400; ++run) {
        const std::size_t n = 2 + rng.below(9);
        const std::uint64_t q = random_prime(rng);
        ProtocolInput in;
        in.shares = random_config(rng, n, q);
        in.secret = random_qubit(rng);
        in.seed = rng.next();
        in.respond = response_rule(opt.fault);
        const Transcript t = run_protocol(in);
        const double f = t.fidelity.value_or(0.0);
        worst = std::min(worst, f);
        if (t.status != RunStatus::Recovered || f < 1.0 - 1e-9) {
            ++failures;
        }
    }
    return {failures == 0, "400 runs, " + std::to_string(failures) + " failures, worst fidelity " + fmt(worst)};
}

std::pair<bool, std::string> outcome_exhaustion(Rng& rng, const Options& opt) {
    double worst = 1.0;
    std::size_t patterns = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            ProtocolInput in;
            in.shares = random_config(rng, n, random_prime(rng));
            in.secret = random_qubit(rng);
            in.seed = rng.next();
            in.respond = response_rule(opt.fault);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                in.masks.push_back(kTwoPi * rng.uniform());
            }
            std::vector<Statevector> recovered;
            for (std::size_t p = 0; p < (std::size_t{1} << (n - 1)); ++p) {
                in.forced_outcomes.clear();
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    in.forced_outcomes.push_back(static_cast<int>((p >> i) & 1));
                }
                const Transcript t = run_protocol(in);
                if (!t.recovered) {
                    return {false, "run aborted: " + t.verdict()};
                }
                recovered.push_back(*t.recovered);
                ++patterns;
            }
            for (std::size_t a = 0; a < recovered.size(); ++a) {
                for (std::size_t b = a + 1; b < recovered.size(); ++b) {
                    worst = std::min(worst, fidelity_up_to_phase(recovered[a], recovered[b]));
                }
            }
        }
    }
    return {worst >= 1.0 - 1e-9, std::to_string(patterns) + " patterns, worst pairwise fidelity " + fmt(worst)};
}

std::pair<bool, std::string> stabilizers(Rng& rng, const Options&) {
    const auto path = ClusterGraph::path(3);
    const auto base = verify_stabilizers(path, canonical_cluster(path));
    double worst = *std::max_element(base.begin(), base.end());
    for (int g = 0; g < 200; ++g) {
        const std::size_t v = 1 + rng.below(6);
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < v; ++a) {
            for (std::size_t b = a + 1; b < v; ++b) {
                if (rng.bit()) {
                    edges.push_back({a, b});
                }
            }
        }
        const ClusterGraph graph(v, edges);
        const auto r = verify_stabilizers(graph, canonical_cluster(graph));
        worst = std::max(worst, *std::max_element(r.begin(), r.end()));
    }
    return {worst < 1e-12 && base.size() == 3, "3-path plus 200 random graphs, max residual " + fmt(worst)};
}

std::pair<bool, std::string> lazy_eager(Rng& rng, const Options&) {
    double worst_f = 1.0;
    double worst_p = 0.0;
    for (int inst = 0; inst < 500; ++inst) {
        const std::size_t n = 2 + rng.below(7);
        const Statevector input = random_qubit(rng);
        std::vector<ChainStep> steps;
        std::vector<int> outcomes;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            ChainStep s;
            s.mask = kTwoPi * rng.uniform();
            s.measure_angle = kTwoPi * rng.uniform();
            const double t = kTwoPi * rng.uniform();
            s.feed_forward = [t](int m) {
                const Mat2 base = Gate::rx(t).matrix() * Gate::h().matrix();
                return m ? base * Gate::x().matrix() : base;
            };
            steps.push_back(std::move(s));
            outcomes.push_back(static_cast<int>(rng.bit()));
        }
        const auto rep = compare_eager_lazy(input, steps, outcomes);
        worst_f = std::min(worst_f, rep.fidelity);
        worst_p = std::max(worst_p, std::abs(rep.lazy_probability - rep.eager_probability));
    }
    return {worst_f >= 1.0 - 1e-9 && worst_p <= 1e-12,
            "500 chains, worst fidelity " + fmt(worst_f) + ", max probability gap " + fmt(worst_p)};
}

std::pair<bool, std::string> experiment(Rng& rng, const Options&) {
    const Histogram h = run_experiment(5000, rng.next());
    std::size_t total = 0;
    std::size_t c2_one = 0;
    for (const auto& [key, count] : h) {
        total += count;
        if (key[0] != '0') {
            c2_one += count;
        }
    }
    const double leak = experiment_c2_leak();
    return {total == 5000 && c2_one == 0 && leak < 1e-9,
            std::to_string(c2_one) + " of " + std::to_string(total) + " shots with c2=1, branch amplitude " +
                fmt(leak)};
}

std::pair<bool, std::string> decoys(Rng& rng, const Options&) {
    const Statevector payload = random_qubit(rng);
    Dispatch big = send_with_decoys(payload, 10000, rng.next());
    big.transmission = eavesdrop_intercept_resend(std::move(big.transmission), rng.next());
    const double rate = detect(big.transmission, big.record, 1.0, rng.next()).error_rate;

    bool clean = true;
    for (int k = 0; k < 50; ++k) {
        const Dispatch d = send_with_decoys(payload, 256, rng.next());
        const auto r = detect(d.transmission, d.record, 0.0, rng.next());
        clean = clean && r.error_rate == 0.0 && r.verdict == Verdict::Clean;
    }
    const double abort = external_abort_rate(64, 1000, rng.next());
    return {std::abs(rate - 0.25) <= 0.02 && clean && abort == 1.0,
            "per-decoy rate " + fmt(rate) + ", clean runs error-free " + (clean ? "yes" : "no") +
                ", 64-decoy abort rate " + fmt(abort)};
}

std::pair<bool, std::string> combiner_attack(Rng& rng, const Options&) {
    double worst_f = 1.0;
    double worst_p = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double omega = kTwoPi * rng.uniform();
        const double phi = kTwoPi * rng.uniform();
        const int fake = static_cast<int>(rng.bit());
        const double theta = shareholder_respond(fake, omega, phi);
        oracle::Vec v = oracle::plus_phi(omega);
        if (fake) {
            v = oracle::apply(oracle::X(), v);
        }
        v = oracle::apply(oracle::RZ(theta), v);
        worst_f = std::min(worst_f, oracle::fidelity(v, oracle::plus_phi(phi)));
        worst_p = std::max(worst_p, std::abs(std::norm(v[0]) - 0.5));
    }
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 2 + rng.below(7);
        const std::uint64_t q = random_prime(rng);
        const ShareConfig cfg = random_config(rng, n, q);
        std::vector<double> masks;
        std::vector<int> fakes;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            masks.push_back(kTwoPi * rng.uniform());
            fakes.push_back(static_cast<int>(rng.bit()));
        }
        const auto res = combiner_fake_attack(cfg, masks, fakes, random_qubit(rng), 1, rng.next());
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const auto want = oracle::plus_phi(oracle::encode(cfg.s, cfg.shares[i], q));
            worst_f = std::min(worst_f, oracle::fidelity(to_oracle(res.stripped[i]), want));
            worst_p = std::max(worst_p, std::abs(res.report.z_statistics[i].p0_exact - 0.5));
        }
    }
    return {worst_f >= 1.0 - 1e-12 && worst_p <= 1e-12,
            "worst stripped fidelity " + fmt(worst_f) + ", max |P(0)-1/2| " + fmt(worst_p)};
}

std::pair<bool, std::string> collusion(Rng& rng, const Options&) {
    double worst = 0.0;
    std::size_t unity_mismatch = 0;
    std::size_t zero_cases = 0;
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 2 + rng.below(7);
        const std::uint64_t q = random_prime(rng);
        ShareConfig cfg = random_config(rng, n, q);
        if (k % 4 == 0) {
            // Force k_C = 0 by letting the dealer close the sum.
            std::uint64_t sum = 0;
            for (auto v : cfg.shares) {
                sum = add_mod(sum, v, q);
            }
            cfg = complete_shares(sub_mod(0, sum, q), cfg.shares, q, cfg.s);
        }
        const Statevector psi = generic_qubit(rng);
        const double lib = collusion_one(cfg, psi).best_guess_fidelity.value_or(-1.0);
        const double phi_c = oracle::encode(cfg.s, cfg.k_C, q);
        const auto v = to_oracle(psi);
        const double want = oracle::fidelity(v, oracle::apply(oracle::RX(-phi_c), v));
        worst = std::max(worst, std::abs(lib - want));
        const bool unity = lib >= 1.0 - 1e-9;
        const bool zero = phi_c == 0.0;
        zero_cases += zero ? 1 : 0;
        if (unity != zero) {
            ++unity_mismatch;
        }
    }
    return {worst <= 1e-9 && unity_mismatch == 0 && zero_cases > 0,
            "max deviation " + fmt(worst) + ", " + std::to_string(zero_cases) + " phi_C=0 cases, " +
                std::to_string(unity_mismatch) + " unity mismatches"};
}

std::pair<bool, std::string> cost(Rng& rng, const Options&) {
    std::size_t mismatches = 0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 2 + rng.below(9);
        const std::size_t w = 2 + rng.below(7);
        const std::uint64_t q = random_prime(rng);
        MultiSecretInput in;
        in.shares = random_config(rng, n, q);
        for (std::size_t j = 0; j < w; ++j) {
            in.secrets.push_back(random_qubit(rng));
            in.randomizers.push_back(1 + rng.below(q - 1));
            in.seeds.push_back(rng.next());
        }
        std::uint64_t add = 0;
        std::uint64_t mul = 0;
        for (const auto& t : run_multi_secret(in)) {
            add += t.counters.additions;
            mul += t.counters.multiplications;
        }
        const auto cc = computation_cost(CostModel{n, w, share_bits(q)});
        const std::uint64_t parties = n + 1;
        if (add != (n - 1) * w || add != cc.total_additions || mul != parties * (2 + w) ||
            mul != cc.total_multiplications) {
            ++mismatches;
        }
    }
    const auto rows = comparison_table(CostModel{3, 1, 2});
    const std::array<std::array<const char*, 3>, 4> table{{{"O(1)", "O(n)T_a+O(1)T_m", "Yes"},
                                                           {"O(|q|n^2)", "O(n)T_a+O(n^3)T_m", "No"},
                                                           {"O(|q|n)", "O(n)T_a+O(n^3)T_m", "No"},
                                                           {"O(|q|n^2)", "O(n)T_a+O(n^4)T_m", "No"}}};
    bool table_ok = rows.size() == table.size();
    for (std::size_t r = 0; table_ok && r < rows.size(); ++r) {
        table_ok = rows[r].distribution_class == table[r][0] && rows[r].computation_class == table[r][1] &&
                   (rows[r].share_reuse ? "Yes" : "No") == std::string(table[r][2]);
    }
    return {mismatches == 0 && table_ok, "50 configurations, " + std::to_string(mismatches) +
                                             " counter mismatches, table " + (table_ok ? "matches" : "differs")};
}

std::pair<bool, std::string> share_reuse(Rng& rng, const Options&) {
    MultiSecretInput in;
    in.shares = random_config(rng, 4, 7);
    for (std::uint64_t s = 1; s <= 4; ++s) {
        in.secrets.push_back(random_qubit(rng));
        in.randomizers.push_back(s);
        in.seeds.push_back(rng.next());
    }
    const auto ts = run_multi_secret(in);
    double worst = 1.0;
    for (std::size_t j = 0; j < ts.size(); ++j) {
        worst = std::min(worst, ts[j].fidelity.value_or(0.0));
    }
    bool distinct = true;
    for (std::size_t a = 0; a < ts.size(); ++a) {
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
            distinct = distinct && ts[a].thetas() != ts[b].thetas();
        }
    }
    return {ts.size() == 4 && worst >= 1.0 - 1e-9 && distinct,
            "w=4, worst fidelity " + fmt(worst) + ", theta streams distinct " + (distinct ? "yes" : "no")};
}

std::pair<bool, std::string> swap_test(Rng& rng, const Options&) {
    double worst = 0.0;
    const Statevector a = basis_state(Basis::Z, 0);
    for (double f : {0.0, 0.5, 0.75, 1.0}) {
        const Statevector b = Statevector::from_amplitudes({std::sqrt(f), std::sqrt(1.0 - f)});
        const double est = swap_test_p0(a, b, 10000, rng.next());
        worst = std::max(worst, std::abs(est - (1.0 + f) / 2.0));
    }
    return {worst <= 0.02, "max |P(0) - (1+F)/2| " + fmt(worst) + " at 10^4 shots"};
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "worked-example replay", 1.0, worked_example_replay},
        {2, "end-to-end recovery", 30.0, end_to_end},
        {3, "outcome exhaustion", 0.0, outcome_exhaustion},
        {4, "stabilizer fixpoints", 0.0, stabilizers},
        {5, "lazy equals eager", 0.0, lazy_eager},
        {6, "experiment reproduction", 10.0, experiment},
        {7, "decoy detection", 0.0, decoys},
        {8, "combiner attack algebra", 0.0, combiner_attack},
        {9, "collusion I fidelity", 0.0, collusion},
        {10, "cost accounting", 0.0, cost},
        {11, "share reuse", 0.0, share_reuse},
        {12, "swap-test estimator", 0.0, swap_test},
    };
    return list;
}

} // namespace

std::vector<CriterionResult> run_all(const Options& options) {
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(c.id)));
        CriterionResult r{c.id, c.name, false, {}, 0.0};
        const auto start = std::chrono::steady_clock::now();
        try {
            auto [ok, detail] = c.check(rng, options);
            r.passed = ok;
            r.detail = std::move(detail);
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0.0 && r.seconds >= c.budget_seconds) {
            r.passed = false;
            r.detail += ", over the " + fmt(c.budget_seconds) + " s budget";
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ' ' << r.name << ": " << r.detail
            << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::defaultfloat << '\n';
        passed += r.passed ? 1 : 0;
    }
    out << passed << '/' << results.size() << " criteria passed\n";
    return passed == results.size();
}

} // namespace qsr::acceptance
