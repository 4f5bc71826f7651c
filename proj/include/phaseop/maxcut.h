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

#ifndef PHASEOP_MAXCUT_H
#define PHASEOP_MAXCUT_H

#include <cstdint>
#include <vector>

#include "phaseop/graph.h"

namespace phaseop {

struct CutResult {
    int value = 0;
    /// partition[v] is the side of vertex v. partition[0] is always false.
    std::vector<bool> partition;
};

/// Number of edges whose endpoints land on different sides.
/// Throws std::domain_error if assignment.size() != g.num_vertices().
int cut_value(const Graph &g, const std::vector<bool> &assignment);

/// Same as cut_value, with vertex v's side taken from bit v of `sides`.
int cut_value(const Graph &g, std::uint32_t sides);

/// Exact maximum cut by exhaustive search over the 2^(n-1) partitions that
/// keep vertex 0 on side 0. Among optimal partitions the lexicographically
/// smallest bit-vector is returned.
CutResult max_cut(const Graph &g);

}  // namespace phaseop

#endif
