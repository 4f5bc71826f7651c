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

#ifndef PHASEOP_GRAPH_H
#define PHASEOP_GRAPH_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phaseop {

/// Largest vertex count any Graph may have. Adjacency rows are 32-bit masks.
inline constexpr std::size_t kMaxVertices = 24;

using Vertex = std::uint32_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    /// Builds the normalized edge {a, b}. Throws std::invalid_argument on a self-loop.
    static Edge of(Vertex a, Vertex b);

    auto operator<=>(const Edge &) const = default;
    bool operator==(const Edge &) const = default;
};

/// Simple undirected labeled graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted lexicographically by
/// (u, v), and every query that iterates edges uses that order.
class Graph {
   public:
    /// Empty graph on n vertices. Requires 1 <= n <= kMaxVertices.
    explicit Graph(std::size_t n);

    /// Throws std::invalid_argument on self-loops, duplicate edges (multigraphs
    /// are not supported), or endpoints out of range.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }

    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(const Edge &e) const { return has_edge(e.u, e.v); }

    /// Bit w of the mask is set iff (v, w) is an edge.
    std::uint32_t neighbor_mask(Vertex v) const;

    std::size_t degree(Vertex v) const;

    /// Number of vertices w adjacent to both endpoints. Throws
    /// std::domain_error if e is not an edge of this graph.
    std::size_t triangles_through_edge(const Edge &e) const;

    /// True iff the whole graph is a single connected component.
    bool connected() const;

    /// True iff some edge lies in at least one triangle.
    bool has_triangle() const;

    /// Copy with e removed. Throws std::domain_error if e is not an edge.
    Graph without_edge(const Edge &e) const;

    /// Copy with every edge incident to v removed.
    Graph without_vertex_edges(Vertex v) const;

    std::string str() const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

   private:
    void check_vertex(Vertex v) const;

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> adjacency_;
};

/// Complete graph K_n.
Graph complete_graph(std::size_t n);
/// Star K_{1,leaves}; the center is the highest-numbered vertex.
Graph star_graph(std::size_t leaves);
/// Cycle through the given vertices in order, on a graph of n vertices.
Graph cycle_on(std::size_t n, std::span<const Vertex> order);
/// Path 0-1-...-(n-1).
Graph path_graph(std::size_t n);

}  // namespace phaseop

#endif
