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

#include "qsr/cluster.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <utility>

#include "qsr/error.hpp"

namespace qsr {

ClusterGraph::ClusterGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ == 0) {
        throw Error(ErrorKind::InvalidArity, "graph needs at least one vertex");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges_) {
        if (e.a >= vertex_count_ || e.b >= vertex_count_) {
            throw Error(ErrorKind::IndexError, "edge endpoint out of range");
        }
        if (e.a == e.b) {
            throw Error(ErrorKind::IndexError, "self-loop on vertex " + std::to_string(e.a));
        }
        if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
            throw Error(ErrorKind::IndexError, "duplicate edge");
        }
    }
}

ClusterGraph ClusterGraph::path(std::size_t vertex_count) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < vertex_count; ++v) {
        edges.push_back({v - 1, v});
    }
    return ClusterGraph(vertex_count, std::move(edges));
}

std::vector<std::size_t> ClusterGraph::neighbors(std::size_t vertex) const {
    std::vector<std::size_t> out;
    for (const auto& e : edges_) {
        if (e.a == vertex) {
            out.push_back(e.b);
        } else if (e.b == vertex) {
            out.push_back(e.a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Statevector build_cluster(const ClusterGraph& graph, std::span<const Statevector> node_states) {
    if (node_states.size() != graph.vertex_count()) {
        throw Error(ErrorKind::DimensionError, "need one node state per vertex");
    }
    for (const auto& s : node_states) {
        if (s.num_qubits() != 1) {
            throw Error(ErrorKind::DimensionError, "node states must be single-qubit");
        }
    }
    Statevector state = Statevector::product(node_states);
    for (const auto& e : graph.edges()) {
        state.apply_cz(e.a, e.b);
    }
    return state;
}

Statevector canonical_cluster(const ClusterGraph& graph) {
    const std::vector<Statevector> nodes(graph.vertex_count(), basis_state(Basis::X, 0));
    return build_cluster(graph, nodes);
}

Statevector apply_stabilizer(const ClusterGraph& graph, std::size_t anchor, const Statevector& state) {
    if (anchor >= graph.vertex_count()) {
        throw Error(ErrorKind::IndexError, "anchor out of range");
    }
    if (state.num_qubits() != graph.vertex_count()) {
        throw Error(ErrorKind::DimensionError, "state does not match graph size");
    }
    std::size_t zmask = 0;
    for (auto v : graph.neighbors(anchor)) {
        zmask |= std::size_t{1} << v;
    }
    const std::size_t xbit = std::size_t{1} << anchor;
    std::vector<Complex> out(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
        out[i ^ xbit] = sign * state[i];
    }
    return Statevector::from_amplitudes(std::move(out));
}

std::vector<double> verify_stabilizers(const ClusterGraph& graph, const Statevector& state) {
    std::vector<double> residuals;
    residuals.reserve(graph.vertex_count());
    for (std::size_t a = 0; a < graph.vertex_count(); ++a) {
        const Statevector k = apply_stabilizer(graph, a, state);
        double sq = 0.0;
        for (std::size_t i = 0; i < state.dimension(); ++i) {
            sq += std::norm(k[i] - state[i]);
        }
        residuals.push_back(std::sqrt(sq));
    }
    return residuals;
}

Statevector rotated_plus(double omega) {
    Statevector s = basis_state(Basis::X, 0);
    s.apply_1q(Gate::rz(omega), 0);
    return s;
}

LazyStep lazy_step_with(const Statevector& input, const Statevector& partner, double measure_angle,
                        const OutcomePolicy& policy) {
    if (input.num_qubits() != 1 || partner.num_qubits() != 1) {
        throw Error(ErrorKind::DimensionError, "lazy step works on single-qubit states");
    }
    const Statevector pair[] = {input, partner};
    Statevector joint = Statevector::product(pair);
    joint.apply_cz(0, 1);
    joint.apply_1q(Gate::rz(-measure_angle), 0);
    const Measurement m = joint.measure(0, Basis::X, policy);
    return {m.outcome, m.probability, joint.contract(0, basis_state(Basis::X, m.outcome))};
}

LazyStep lazy_step(const Statevector& input, double mask, double measure_angle, const OutcomePolicy& policy) {
    return lazy_step_with(input, rotated_plus(mask), measure_angle, policy);
}

namespace {

void check_chain(const Statevector& input, std::size_t steps, std::size_t policies) {
    if (input.num_qubits() != 1) {
        throw Error(ErrorKind::DimensionError, "chain input must be a single qubit");
    }
    if (steps != policies) {
        throw Error(ErrorKind::DimensionError, "need one outcome policy per measured node");
    }
}

Statevector node_state(const ChainStep& step) {
    return step.partner ? *step.partner : rotated_plus(step.mask);
}

} // namespace

ChainRun run_lazy_chain(const Statevector& input, std::span<const ChainStep> steps,
                        std::span<const OutcomePolicy> policies) {
    check_chain(input, steps.size(), policies.size());
    ChainRun run{input, {}, 1.0};
    for (std::size_t j = 0; j < steps.size(); ++j) {
        LazyStep step = lazy_step_with(run.output, node_state(steps[j]), steps[j].measure_angle, policies[j]);
        run.outcomes.push_back(step.outcome);
        run.joint_probability *= step.probability;
        if (steps[j].feed_forward) {
            step.output.apply_matrix(steps[j].feed_forward(step.outcome), 0);
        }
        run.output = std::move(step.output);
    }
    return run;
}

ChainRun run_eager_chain(const Statevector& input, std::span<const ChainStep> steps,
                         std::span<const OutcomePolicy> policies) {
    check_chain(input, steps.size(), policies.size());
    if (steps.empty()) {
        return {input, {}, 1.0};
    }
    const std::size_t n = steps.size() + 1;
    std::vector<Statevector> nodes{input};
    for (const auto& s : steps) {
        nodes.push_back(node_state(s));
    }
    Statevector state = build_cluster(ClusterGraph::path(n), nodes);

    ChainRun run{input, {}, 1.0};
    for (std::size_t j = 0; j + 1 < n; ++j) {
        state.apply_1q(Gate::rz(-steps[j].measure_angle), j);
        const Measurement m = state.measure(j, Basis::X, policies[j]);
        run.outcomes.push_back(m.outcome);
        run.joint_probability *= m.probability;
        if (steps[j].feed_forward) {
            const bool pending_edge = j + 2 < n;
            if (pending_edge) {
                state.apply_cz(j + 1, j + 2);
            }
            state.apply_matrix(steps[j].feed_forward(m.outcome), j + 1);
            if (pending_edge) {
                state.apply_cz(j + 1, j + 2);
            }
        }
    }
    // Peel the measured nodes off the front; each sits in its |+>/|-> outcome state.
    for (std::size_t j = 0; j + 1 < n; ++j) {
        state = state.contract(0, basis_state(Basis::X, run.outcomes[j]));
    }
    run.output = std::move(state);
    return run;
}

bool EquivalenceReport::equivalent() const {
    return std::abs(1.0 - fidelity) <= 1e-9 && std::abs(lazy_probability - eager_probability) <= 1e-12;
}

EquivalenceReport compare_eager_lazy(const Statevector& input, std::span<const ChainStep> steps,
                                     std::span<const int> forced_outcomes) {
    if (forced_outcomes.size() != steps.size()) {
        throw Error(ErrorKind::DimensionError, "need one forced outcome per measured node");
    }
    std::vector<OutcomePolicy> policies;
    for (int bit : forced_outcomes) {
        policies.emplace_back(Forced{bit});
    }
    const ChainRun lazy = run_lazy_chain(input, steps, policies);
    const ChainRun eager = run_eager_chain(input, steps, policies);
    return {fidelity_up_to_phase(lazy.output, eager.output), lazy.joint_probability, eager.joint_probability};
}

bool eager_equals_lazy(const Statevector& input, std::span<const ChainStep> steps,
                       std::span<const int> forced_outcomes) {
    return compare_eager_lazy(input, steps, forced_outcomes).equivalent();
}

} // namespace qsr
