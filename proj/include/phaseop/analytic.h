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

#ifndef PHASEOP_ANALYTIC_H
#define PHASEOP_ANALYTIC_H

#include <vector>

#include "phaseop/graph.h"

namespace phaseop {

/// Operator-graph statistics seen by one cost edge (u, v).
struct PhaseEdgeStats {
    /// 1 if (u, v) is itself an operator edge.
    int chi = 0;
    /// Operator edges (u, c) with c != v.
    int d = 0;
    /// Operator edges (h, v) with h != u.
    int e = 0;
    /// Common operator-neighbors w of u and v (w != u, v).
    int f = 0;

    auto operator<=>(const PhaseEdgeStats &) const = default;
};

struct Angles1 {
    double gamma = 0;
    double beta = 0;
};

PhaseEdgeStats edge_stats(const Edge &cost_edge, const Graph &op_graph);

/// Single-layer expected cut contribution of one cost edge:
///
///   1/2 + (chi/4) sin(4b) sin(g) (cos^d g + cos^e g)
///       - (1/4) sin^2(2b) cos^(d+e-2f)(g) (1 - cos^f(2g))
///
/// Powers use integer exponents, so cos^0 is exactly 1.
double edge_expectation(const PhaseEdgeStats &stats, const Angles1 &angles);

/// Sum of edge_expectation over the cost edges. Throws std::domain_error if
/// the two graphs have different vertex counts.
double total_expectation(const Graph &cost_graph, const Graph &op_graph, const Angles1 &angles);

/// Precomputed single-layer objective for one (cost, operator) pair.
/// Edges with identical statistics are merged, so evaluation cost depends on
/// the number of distinct PhaseEdgeStats rather than on |E|.
class P1Expectation {
   public:
    P1Expectation(const Graph &cost_graph, const Graph &op_graph);

    double operator()(const Angles1 &angles) const;
    std::size_t num_edges() const { return num_edges_; }

   private:
    struct Group {
        PhaseEdgeStats stats;
        double weight;
    };
    std::vector<Group> groups_;
    std::size_t num_edges_ = 0;
    int max_power_ = 0;
};

}  // namespace phaseop

#endif
