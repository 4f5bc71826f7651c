// Copyright 2026 The phaseop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHASEOP_STRATEGIES_H
#define PHASEOP_STRATEGIES_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phaseop/graph.h"

namespace phaseop {

enum class StrategyKind {
    Standard,
    Random,
    SubgraphAlpha,
    TRMost,
    TRKMost,
    TRAll,
    TRRandom,
    MDER,
    MDERAll,
};

/// Exact fraction num/den in (0, 1].
struct Fraction {
    std::uint32_t num = 1;
    std::uint32_t den = 1;
    bool operator==(const Fraction &) const = default;
};

/// How to derive phase-operator graphs from a cost graph.
///
/// `alpha` is read only for SubgraphAlpha and `k` only for TRKMost and MDER.
struct StrategySpec {
    StrategyKind kind = StrategyKind::Standard;
    Fraction alpha{};
    std::uint32_t k = 1;
    std::size_t max_instances = 10;
    std::uint64_t seed = 0;

    /// Serialized name, e.g. "standard", "sub-1/4", "tr-2most", "mder-1".
    std::string name() const;
    /// Inverse of name(). Accepts sub-p/q for any 0 < p/q <= 1, tr-<k>most
    /// and mder-<k>. Throws std::invalid_argument on anything else.
    static StrategySpec parse(std::string_view name);

    /// Throws std::invalid_argument if the spec's fields are out of range.
    void validate() const;
};

/// Strategy family used for pooled statistics: standard, random, sub, tr, mder.
std::string_view strategy_family(StrategyKind kind);

/// The fourteen strategies evaluated in the reference experiment, in order.
std::vector<std::string> default_strategy_names();

struct PhaseOpInstance {
    Graph operator_graph;
    StrategySpec strategy;
    std::size_t instance_index = 0;
};

/// Attempt budget for deduplicating samplers: this many draws per requested
/// instance before giving up on finding more isomorphism classes.
inline constexpr std::size_t kDrawsPerInstance = 100;

/// Operator graphs with |E(g)| edges drawn uniformly from the complete graph.
std::vector<PhaseOpInstance> gen_random(const Graph &g, const StrategySpec &spec);
/// Operator graphs with ceil(alpha |E(g)|) edges drawn uniformly from E(g).
std::vector<PhaseOpInstance> gen_subgraph(const Graph &g, const StrategySpec &spec);
/// Triangle-removal operators (TRMost, TRKMost, TRAll, TRRandom).
std::vector<PhaseOpInstance> gen_tr(const Graph &g, const StrategySpec &spec);
/// Max-degree edge-removal operators (MDER, MDERAll).
std::vector<PhaseOpInstance> gen_mder(const Graph &g, const StrategySpec &spec);

/// Dispatches on spec.kind. Standard returns the cost graph itself.
std::vector<PhaseOpInstance> generate_phase_operators(const Graph &g, const StrategySpec &spec);

/// Edge of g in the most triangles, ties broken by the smallest (u, v).
/// Empty if g is triangle-free.
std::optional<Edge> most_triangle_edge(const Graph &g);

/// Lowest-indexed vertex of maximum degree.
Vertex max_degree_vertex(const Graph &g);

}  // namespace phaseop

#endif
