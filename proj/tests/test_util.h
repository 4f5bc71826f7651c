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

// Fixtures and brute-force oracles shared by the test binaries. Nothing here
// calls into the library code paths it is used to check.

#ifndef PHASEOP_TESTS_TEST_UTIL_H
#define PHASEOP_TESTS_TEST_UTIL_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "phaseop/graph.h"

namespace phaseop::testing {

/// Eight-vertex example graph where a perfect-matching operator reaches AR 1.
inline Graph fig1_graph() {
    return Graph(8, {{0, 3}, {0, 6}, {0, 7}, {1, 4}, {1, 7}, {2, 5}, {2, 7}, {3, 6}, {4, 7}, {5, 7}});
}

/// The perfect matching used as its phase operator.
inline Graph fig1_matching() {
    return Graph(8, {{0, 7}, {1, 4}, {2, 5}, {3, 6}});
}

/// Star on n vertices (center n-1) and the operator that cycles the leaves.
inline Graph leaf_cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.push_back(Edge::of(i, static_cast<Vertex>((i + 1) % (n - 1))));
    }
    return Graph(n, edges);
}

/// G(n, q) with a fixed std::mt19937_64 stream.
inline Graph random_graph(std::mt19937_64 &rng, std::size_t n, double q) {
    std::vector<Edge> edges;
    std::uniform_real_distribution<double> coin(0, 1);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (coin(rng) < q) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, edges);
}

inline Graph random_connected_graph(std::mt19937_64 &rng, std::size_t n, double q) {
    while (true) {
        Graph g = random_graph(rng, n, q);
        if (g.connected()) {
            return g;
        }
    }
}

inline Graph relabel(const Graph &g, const std::vector<Vertex> &perm) {
    std::vector<Edge> edges;
    for (const Edge &e : g.edges()) {
        edges.push_back(Edge::of(perm[e.u], perm[e.v]));
    }
    return Graph(g.num_vertices(), edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64 &rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Edge list as a plain set of pairs, for set-based reference computations.
inline std::set<std::pair<Vertex, Vertex>> edge_set(const Graph &g) {
    std::set<std::pair<Vertex, Vertex>> out;
    for (const Edge &e : g.edges()) {
        out.insert({e.u, e.v});
    }
    return out;
}

inline bool adjacent(const std::set<std::pair<Vertex, Vertex>> &edges, Vertex a, Vertex b) {
    return edges.contains({std::min(a, b), std::max(a, b)});
}

/// Max cut by the plain double loop: every 0/1 vector, every edge.
inline int brute_force_max_cut(const Graph &g) {
    const std::size_t n = g.num_vertices();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int cut = 0;
        for (const Edge &e : g.edges()) {
            bool su = mask >> e.u & 1;
            bool sv = mask >> e.v & 1;
            if (su != sv) {
                ++cut;
            }
        }
        best = std::max(best, cut);
    }
    return best;
}

/// Canonical bitstring by trying all n! relabelings with std::next_permutation.
/// Bits follow graph6 column order; the minimum string is returned.
inline std::string brute_force_canonical(const Graph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits;
        for (Vertex j = 1; j < n; ++j) {
            for (Vertex i = 0; i < j; ++i) {
                bits.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
            }
        }
        if (best.empty() || bits < best) {
            best = bits;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace phaseop::testing

#endif
