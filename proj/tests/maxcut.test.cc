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

#include "gtest/gtest.h"

#include "test_util.h"

using namespace phaseop;
using namespace phaseop::testing;

TEST(maxcut, fig1_graph) {
    CutResult r = max_cut(fig1_graph());
    ASSERT_EQ(r.value, 7);
    ASSERT_EQ(cut_value(fig1_graph(), r.partition), 7);
}

TEST(maxcut, small_graphs) {
    ASSERT_EQ(max_cut(complete_graph(3)).value, 2);
    CutResult star = max_cut(star_graph(7));
    ASSERT_EQ(star.value, 7);
    // Vertex 0 is pinned to side 0, so the center (vertex 7) is on side 1.
    ASSERT_EQ(star.partition, (std::vector<bool>{0, 0, 0, 0, 0, 0, 0, 1}));
    ASSERT_EQ(max_cut(Graph(1)).value, 0);
}

TEST(maxcut, tie_break_is_lexicographically_smallest) {
    // C4: optimal cuts are 0101 and 1010; with vertex 0 fixed, 0101 remains.
    CutResult r = max_cut(cycle_on(4, std::vector<Vertex>{0, 1, 2, 3}));
    ASSERT_EQ(r.value, 4);
    ASSERT_EQ(r.partition, (std::vector<bool>{0, 1, 0, 1}));
    // K3: optimal partitions with vertex 0 on side 0 are 001, 010, 011; smallest is 001.
    ASSERT_EQ(max_cut(complete_graph(3)).partition, (std::vector<bool>{0, 0, 1}));
}

TEST(maxcut, cut_value_examples) {
    Graph k3 = complete_graph(3);
    ASSERT_EQ(cut_value(k3, std::vector<bool>{0, 0, 0}), 0);
    ASSERT_EQ(cut_value(k3, std::vector<bool>{0, 0, 1}), 2);
    // Diamond vertices v6, v7 against the rest.
    ASSERT_EQ(cut_value(fig1_graph(), std::vector<bool>{0, 0, 0, 0, 0, 0, 1, 1}), 7);
    ASSERT_EQ(cut_value(fig1_graph(), std::uint32_t{0b11000000}), 7);
    ASSERT_THROW(cut_value(k3, std::vector<bool>{0, 1}), std::domain_error);
}

TEST(maxcut, complement_assignment_has_same_cut) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 2 + trial % 8, 0.5);
        std::vector<bool> a(g.num_vertices());
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = rng() & 1;
        }
        std::vector<bool> b = a;
        b.flip();
        ASSERT_EQ(cut_value(g, a), cut_value(g, b));
    }
}

TEST(maxcut, at_least_half_the_edges) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 1 + trial % 10, 0.6);
        ASSERT_GE(2 * max_cut(g).value, static_cast<int>(g.num_edges()));
    }
}

TEST(maxcut, matches_double_loop_oracle) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 1 + trial % 8, 0.3 + 0.5 * (trial % 3) / 2.0);
        CutResult r = max_cut(g);
        ASSERT_EQ(r.value, brute_force_max_cut(g)) << g.str();
        ASSERT_EQ(cut_value(g, r.partition), r.value);
        ASSERT_FALSE(r.partition[0]);
    }
}
