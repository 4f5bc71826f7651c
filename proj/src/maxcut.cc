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

#include "phaseop/maxcut.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace phaseop {

int cut_value(const Graph &g, const std::vector<bool> &assignment) {
    if (assignment.size() != g.num_vertices()) {
        throw std::domain_error("assignment length " + std::to_string(assignment.size()) + " != vertex count " +
                                std::to_string(g.num_vertices()));
    }
    int count = 0;
    for (const Edge &e : g.edges()) {
        count += assignment[e.u] != assignment[e.v];
    }
    return count;
}

int cut_value(const Graph &g, std::uint32_t sides) {
    int count = 0;
    for (const Edge &e : g.edges()) {
        count += ((sides >> e.u) ^ (sides >> e.v)) & 1;
    }
    return count;
}

CutResult max_cut(const Graph &g) {
    const std::size_t n = g.num_vertices();
    if (n > kMaxVertices) {
        throw std::domain_error("max_cut supports at most " + std::to_string(kMaxVertices) + " vertices");
    }
    std::vector<std::uint32_t> adjacency(n);
    for (Vertex v = 0; v < n; ++v) {
        adjacency[v] = g.neighbor_mask(v);
    }

    // Counter k enumerates vertices 1..n-1 with vertex 1 as the most
    // significant bit, so increasing k is increasing lexicographic order.
    const std::uint32_t free_vertices = static_cast<std::uint32_t>(n - 1);
    const std::uint32_t limit = std::uint32_t{1} << free_vertices;
    int best = -1;
    std::uint32_t best_sides = 0;
    for (std::uint32_t k = 0; k < limit; ++k) {
        std::uint32_t sides = 0;
        for (std::uint32_t i = 1; i < n; ++i) {
            sides |= (k >> (free_vertices - i) & 1) << i;
        }
        int crossing = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            std::uint32_t other = sides >> v & 1 ? ~sides : sides;
            crossing += std::popcount(adjacency[v] & other);
        }
        crossing /= 2;
        if (crossing > best) {
            best = crossing;
            best_sides = sides;
        }
    }

    CutResult result{best, std::vector<bool>(n)};
    for (std::uint32_t v = 0; v < n; ++v) {
        result.partition[v] = best_sides >> v & 1;
    }
    return result;
}

}  // namespace phaseop
