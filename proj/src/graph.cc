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

#include "phaseop/graph.h"

#include <algorithm>
#include <bit>
#include <sstream>

namespace phaseop {

Edge Edge::of(Vertex a, Vertex b) {
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n) : n_(n), adjacency_(n, 0) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument(
            "vertex count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVertices) + "]");
    }
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (const Edge &raw : edges) {
        Edge e = Edge::of(raw.u, raw.v);
        check_vertex(e.v);
        if (adjacency_[e.u] >> e.v & 1) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        adjacency_[e.u] |= std::uint32_t{1} << e.v;
        adjacency_[e.v] |= std::uint32_t{1} << e.u;
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
}

static std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        out.push_back(Edge::of(a, b));
    }
    return out;
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n, to_edges(edges)) {}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) {
        return false;
    }
    return adjacency_[a] >> b & 1;
}

std::uint32_t Graph::neighbor_mask(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const {
    return std::popcount(neighbor_mask(v));
}

std::size_t Graph::triangles_through_edge(const Edge &e) const {
    if (!has_edge(e)) {
        throw std::domain_error("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    }
    return std::popcount(adjacency_[e.u] & adjacency_[e.v]);
}

bool Graph::connected() const {
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) {
            next |= adjacency_[std::countr_zero(f)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == static_cast<int>(n_);
}

bool Graph::has_triangle() const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge &e) {
        return (adjacency_[e.u] & adjacency_[e.v]) != 0;
    });
}

Graph Graph::without_edge(const Edge &e) const {
    if (!has_edge(e)) {
        throw std::domain_error("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    }
    std::vector<Edge> kept;
    kept.reserve(edges_.size() - 1);
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(kept), [&](const Edge &x) { return x != e; });
    return Graph(n_, kept);
}

Graph Graph::without_vertex_edges(Vertex v) const {
    check_vertex(v);
    std::vector<Edge> kept;
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(kept), [&](const Edge &x) {
        return x.u != v && x.v != v;
    });
    return Graph(n_, kept);
}

std::string Graph::str() const {
    std::ostringstream out;
    out << "Graph(n=" << n_ << ", {";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        out << (i ? ", " : "") << "(" << edges_[i].u << "," << edges_[i].v << ")";
    }
    out << "})";
    return out.str();
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    const auto center = static_cast<Vertex>(leaves);
    for (Vertex leaf = 0; leaf < center; ++leaf) {
        edges.push_back({leaf, center});
    }
    return Graph(leaves + 1, edges);
}

Graph cycle_on(std::size_t n, std::span<const Vertex> order) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order.size(); ++i) {
        edges.push_back(Edge::of(order[i], order[(i + 1) % order.size()]));
    }
    return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({v - 1, v});
    }
    return Graph(n, edges);
}

}  // namespace phaseop
