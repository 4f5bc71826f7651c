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

#include "phaseop/analytic.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace phaseop {

namespace {

double int_pow(double base, int exponent) {
    double result = 1.0;
    for (; exponent > 0; --exponent) {
        result *= base;
    }
    return result;
}

}  // namespace

PhaseEdgeStats edge_stats(const Edge &cost_edge, const Graph &op_graph) {
    const Vertex u = cost_edge.u;
    const Vertex v = cost_edge.v;
    const std::uint32_t nu = op_graph.neighbor_mask(u) & ~(std::uint32_t{1} << v);
    const std::uint32_t nv = op_graph.neighbor_mask(v) & ~(std::uint32_t{1} << u);
    return PhaseEdgeStats{
        op_graph.has_edge(u, v) ? 1 : 0,
        std::popcount(nu),
        std::popcount(nv),
        std::popcount(nu & nv),
    };
}

double edge_expectation(const PhaseEdgeStats &s, const Angles1 &a) {
    const double cos_g = std::cos(a.gamma);
    const double sin_2b = std::sin(2 * a.beta);
    double value = 0.5;
    if (s.chi) {
        value += 0.25 * std::sin(4 * a.beta) * std::sin(a.gamma) * (int_pow(cos_g, s.d) + int_pow(cos_g, s.e));
    }
    value -= 0.25 * sin_2b * sin_2b * int_pow(cos_g, s.d + s.e - 2 * s.f) * (1 - int_pow(std::cos(2 * a.gamma), s.f));
    return value;
}

double total_expectation(const Graph &cost_graph, const Graph &op_graph, const Angles1 &angles) {
    if (cost_graph.num_vertices() != op_graph.num_vertices()) {
        throw std::domain_error("cost graph has " + std::to_string(cost_graph.num_vertices()) +
                                " vertices but operator graph has " + std::to_string(op_graph.num_vertices()));
    }
    double total = 0;
    for (const Edge &e : cost_graph.edges()) {
        total += edge_expectation(edge_stats(e, op_graph), angles);
    }
    return total;
}

P1Expectation::P1Expectation(const Graph &cost_graph, const Graph &op_graph) : num_edges_(cost_graph.num_edges()) {
    if (cost_graph.num_vertices() != op_graph.num_vertices()) {
        throw std::domain_error("cost and operator graphs differ in vertex count");
    }
    std::map<PhaseEdgeStats, int> counts;
    for (const Edge &e : cost_graph.edges()) {
        ++counts[edge_stats(e, op_graph)];
    }
    for (const auto &[stats, count] : counts) {
        groups_.push_back({stats, static_cast<double>(count)});
        max_power_ = std::max({max_power_, stats.d, stats.e, stats.d + stats.e - 2 * stats.f});
    }
}

double P1Expectation::operator()(const Angles1 &a) const {
    // cos^k(g) and cos^k(2g) tables; the largest exponent is d + e <= 2n.
    std::array<double, 2 * kMaxVertices + 1> cos_pow;
    std::array<double, 2 * kMaxVertices + 1> cos2_pow;
    const double cos_g = std::cos(a.gamma);
    const double cos_2g = std::cos(2 * a.gamma);
    cos_pow[0] = 1.0;
    cos2_pow[0] = 1.0;
    for (int k = 1; k <= max_power_; ++k) {
        cos_pow[k] = cos_pow[k - 1] * cos_g;
        cos2_pow[k] = cos2_pow[k - 1] * cos_2g;
    }
    const double linear = 0.25 * std::sin(4 * a.beta) * std::sin(a.gamma);
    const double sin_2b = std::sin(2 * a.beta);
    const double quadratic = 0.25 * sin_2b * sin_2b;

    double total = 0.5 * static_cast<double>(num_edges_);
    for (const Group &g : groups_) {
        const PhaseEdgeStats &s = g.stats;
        double term = 0;
        if (s.chi) {
            term += linear * (cos_pow[s.d] + cos_pow[s.e]);
        }
        term -= quadratic * cos_pow[s.d + s.e - 2 * s.f] * (1 - cos2_pow[s.f]);
        total += g.weight * term;
    }
    return total;
}

}  // namespace phaseop
