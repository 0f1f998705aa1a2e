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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qsr/statevec.hpp"

namespace qsr {

struct Edge {
    std::size_t a;
    std::size_t b;
};

/// Undirected simple graph over vertices 0..vertex_count-1. Vertex v is
/// qubit v of any state built from the graph.
class ClusterGraph {
public:
    /// InvalidArity for zero vertices; IndexError for out-of-range endpoints,
    /// self-loops or duplicate edges.
    ClusterGraph(std::size_t vertex_count, std::vector<Edge> edges);

    /// The 1-D chain 0-1-...-(n-1).
    static ClusterGraph path(std::size_t vertex_count);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t vertex) const;

private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
};

/// Tensor product of the node states in vertex order followed by one CZ per edge.
Statevector build_cluster(const ClusterGraph& graph, std::span<const Statevector> node_states);

/// All nodes in |+>.
Statevector canonical_cluster(const ClusterGraph& graph);

/// K_a = X on the anchor, Z on each neighbour.
Statevector apply_stabilizer(const ClusterGraph& graph, std::size_t anchor, const Statevector& state);

/// ||K_a|state> - |state>|| for every anchor a, in vertex order.
std::vector<double> verify_stabilizers(const ClusterGraph& graph, const Statevector& state);

/// R_Z(omega)|+>.
Statevector rotated_plus(double omega);

struct LazyStep {
    int outcome;
    double probability;
    Statevector output;
};

/// Entangles `input` with `partner` by CZ, measures the input qubit in the
/// {|+_theta>, |-_theta>} basis and returns the collapsed partner qubit,
/// which equals R_Z(omega) X^m H R_Z(-theta) |input> when partner = |+_omega>.
LazyStep lazy_step_with(const Statevector& input, const Statevector& partner, double measure_angle,
                        const OutcomePolicy& policy);

LazyStep lazy_step(const Statevector& input, double mask, double measure_angle, const OutcomePolicy& policy);

/// One link of a measured chain: the next node is R_Z(mask)|+>, the current
/// node is measured at measure_angle, and feed_forward(m) is applied to the
/// next node afterwards.
struct ChainStep {
    double mask = 0.0;
    double measure_angle = 0.0;
    std::function<Mat2(int)> feed_forward;
    /// Overrides R_Z(mask)|+> with an explicit next-node state (e.g. a qubit
    /// that came through a channel).
    std::optional<Statevector> partner;
};

struct ChainRun {
    Statevector output;
    std::vector<int> outcomes;
    /// Product of the conditional branch probabilities.
    double joint_probability;
};

/// Two qubits at a time: lazy_step, then the feed-forward, per link.
ChainRun run_lazy_chain(const Statevector& input, std::span<const ChainStep> steps,
                        std::span<const OutcomePolicy> policies);

/// Whole path entangled up front on steps.size()+1 qubits, then measured left
/// to right. A feed-forward on node j acts in the frame of its still-pending
/// edge (j, j+1), i.e. as CZ U CZ, which is what lazy entanglement implies.
ChainRun run_eager_chain(const Statevector& input, std::span<const ChainStep> steps,
                         std::span<const OutcomePolicy> policies);

struct EquivalenceReport {
    double fidelity;
    double lazy_probability;
    double eager_probability;
    [[nodiscard]] bool equivalent() const;
};

EquivalenceReport compare_eager_lazy(const Statevector& input, std::span<const ChainStep> steps,
                                     std::span<const int> forced_outcomes);

/// Fidelity 1 within 1e-9 and equal joint branch probabilities within 1e-12.
/// DimensionError when there is not one outcome per measured node.
bool eager_equals_lazy(const Statevector& input, std::span<const ChainStep> steps,
                       std::span<const int> forced_outcomes);

} // namespace qsr
