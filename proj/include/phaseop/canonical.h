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

#ifndef PHASEOP_CANONICAL_H
#define PHASEOP_CANONICAL_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "phaseop/graph.h"

namespace phaseop {

inline constexpr std::size_t kMaxCanonicalVertices = 10;

/// Isomorphism-class key for small graphs.
///
/// `bits` holds the upper-triangle adjacency bits in graph6 column order
/// ((0,1), (0,2), (1,2), (0,3), ...), first bit most significant. The stored
/// value is the minimum over every relabeling of the vertices, so two graphs
/// are isomorphic exactly when their forms compare equal.
struct CanonicalForm {
    std::uint32_t n = 0;
    std::uint64_t bits = 0;

    std::size_t num_bits() const { return n * (n - 1) / 2; }
    /// The bitstring as '0'/'1' characters, first bit first.
    std::string bitstring() const;

    auto operator<=>(const CanonicalForm &) const = default;
    bool operator==(const CanonicalForm &) const = default;
};

/// Exhaustive search over vertex relabelings with prefix pruning.
/// Throws std::domain_error when n > kMaxCanonicalVertices.
CanonicalForm canonical_form(const Graph &g);

/// Rebuilds a representative graph from a canonical form.
Graph graph_from_canonical(const CanonicalForm &form);

}  // namespace phaseop

template <>
struct std::hash<phaseop::CanonicalForm> {
    std::size_t operator()(const phaseop::CanonicalForm &f) const noexcept {
        return std::hash<std::uint64_t>{}(f.bits * 0x9E3779B97F4A7C15ull ^ f.n);
    }
};

#endif
