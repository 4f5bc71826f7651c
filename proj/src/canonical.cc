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

#include "phaseop/canonical.h"

#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

namespace phaseop {

namespace {

struct Search {
    std::size_t n;
    std::size_t total_bits;
    std::array<std::uint32_t, kMaxCanonicalVertices> adjacency{};
    std::array<Vertex, kMaxCanonicalVertices> image{};
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();

    // Mask keeping the leading `len` bits of a total_bits-wide value.
    std::uint64_t prefix_mask(std::size_t len) const {
        if (len == 0) {
            return 0;
        }
        std::uint64_t ones = len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
        return ones << (total_bits - len);
    }

    // Label `k` is being assigned; labels 0..k-1 hold image[0..k-1].
    void extend(std::size_t k, std::uint32_t unused, std::uint64_t prefix) {
        if (k == n) {
            if (prefix < best) {
                best = prefix;
            }
            return;
        }
        std::size_t column_start = k * (k - 1) / 2;
        std::size_t prefix_len = column_start + k;
        std::uint64_t mask = prefix_mask(prefix_len);
        for (std::uint32_t rest = unused; rest; rest &= rest - 1) {
            auto v = static_cast<Vertex>(std::countr_zero(rest));
            std::uint64_t next = prefix;
            for (std::size_t i = 0; i < k; ++i) {
                if (adjacency[image[i]] >> v & 1) {
                    next |= std::uint64_t{1} << (total_bits - 1 - (column_start + i));
                }
            }
            if (best != std::numeric_limits<std::uint64_t>::max() && (next & mask) > (best & mask)) {
                continue;
            }
            image[k] = v;
            extend(k + 1, unused & ~(std::uint32_t{1} << v), next);
        }
    }
};

}  // namespace

std::string CanonicalForm::bitstring() const {
    std::string out;
    std::size_t m = num_bits();
    for (std::size_t k = 0; k < m; ++k) {
        out.push_back(bits >> (m - 1 - k) & 1 ? '1' : '0');
    }
    return out;
}

CanonicalForm canonical_form(const Graph &g) {
    std::size_t n = g.num_vertices();
    if (n > kMaxCanonicalVertices) {
        throw std::domain_error("canonical_form supports at most " + std::to_string(kMaxCanonicalVertices) +
                                " vertices, got " + std::to_string(n));
    }
    CanonicalForm form{static_cast<std::uint32_t>(n), 0};
    if (n == 1 || g.num_edges() == 0) {
        return form;
    }
    Search search{n, n * (n - 1) / 2};
    for (Vertex v = 0; v < n; ++v) {
        search.adjacency[v] = g.neighbor_mask(v);
    }
    search.extend(0, (std::uint32_t{1} << n) - 1, 0);
    form.bits = search.best;
    return form;
}

Graph graph_from_canonical(const CanonicalForm &form) {
    std::vector<Edge> edges;
    std::size_t m = form.num_bits();
    std::size_t bit = 0;
    for (Vertex j = 1; j < form.n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (form.bits >> (m - 1 - bit) & 1) {
                edges.push_back({i, j});
            }
        }
    }
    return Graph(form.n, edges);
}

}  // namespace phaseop
