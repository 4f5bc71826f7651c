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

#include <numbers>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace phaseop;
using namespace phaseop::testing;

constexpr double kPi = std::numbers::pi;

TEST(analytic, fig1_edge_stats) {
    Graph op = fig1_matching();
    ASSERT_EQ(edge_stats({0, 7}, op), (PhaseEdgeStats{1, 0, 0, 0}));
    ASSERT_EQ(edge_stats({0, 3}, op), (PhaseEdgeStats{0, 1, 1, 0}));
}

TEST(analytic, triangle_edge_stats) {
    Graph k3 = complete_graph(3);
    for (const Edge &e : k3.edges()) {
        ASSERT_EQ(edge_stats(e, k3), (PhaseEdgeStats{1, 1, 1, 1}));
    }
    // The wedge 0-2-1 counts toward f even though (0,1) is not an operator edge.
    ASSERT_EQ(edge_stats({0, 1}, Graph(3, {{0, 2}, {1, 2}})), (PhaseEdgeStats{0, 1, 1, 1}));
}

TEST(analytic, matched_edge_reaches_one) {
    ASSERT_NEAR(edge_expectation({1, 0, 0, 0}, {kPi / 2, kPi / 8}), 1.0, 1e-15);
}

TEST(analytic, untouched_edges_stay_at_half) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> angle(-10, 10);
    for (int trial = 0; trial < 200; ++trial) {
        PhaseEdgeStats s{0, trial % 5, (trial / 5) % 5, 0};
        ASSERT_NEAR(edge_expectation(s, {angle(rng), angle(rng)}), 0.5, 1e-15);
    }
}

TEST(analytic, zero_gamma_gives_half) {
    for (int d = 0; d < 6; ++d) {
        for (int f = 0; f <= d; ++f) {
            for (double beta : {0.1, 0.7, 2.0}) {
                ASSERT_NEAR(edge_expectation({1, d, d, f}, {0.0, beta}), 0.5, 1e-15);
                ASSERT_NEAR(edge_expectation({0, d, d, f}, {0.0, beta}), 0.5, 1e-15);
            }
        }
    }
}

TEST(analytic, zero_exponent_at_quarter_turn) {
    // cos(pi/2) is not exactly zero in floating point; cos^0 must still be 1.
    ASSERT_NEAR(edge_expectation({1, 0, 3, 0}, {kPi / 2, kPi / 8}), 0.75, 1e-15);
}

TEST(analytic, fig1_total_is_seven) {
    ASSERT_NEAR(total_expectation(fig1_graph(), fig1_matching(), {kPi / 2, kPi / 8}), 7.0, 1e-12);
}

TEST(analytic, star_with_leaf_cycle_is_constant) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    for (std::size_t n = 4; n <= 8; ++n) {
        Graph star = star_graph(n - 1);
        Graph op = leaf_cycle(n);
        ASSERT_EQ(op.num_edges(), n - 1);
        for (int trial = 0; trial < 20; ++trial) {
            ASSERT_NEAR(total_expectation(star, op, {angle(rng), angle(rng)}), (n - 1) / 2.0, 1e-12);
        }
    }
}

TEST(analytic, empty_operator_gives_half_per_edge) {
    ASSERT_NEAR(total_expectation(fig1_graph(), Graph(8), {1.1, 0.3}), 5.0, 1e-15);
}

TEST(analytic, vertex_count_mismatch) {
    ASSERT_THROW(total_expectation(complete_graph(3), complete_graph(4), {0.1, 0.2}), std::domain_error);
    ASSERT_THROW(P1Expectation(complete_graph(3), complete_graph(4)), std::domain_error);
}

TEST(analytic, periodicity) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> angle(-4, 4);
    for (int trial = 0; trial < 300; ++trial) {
        PhaseEdgeStats s{trial % 2, trial % 6, (trial / 2) % 6, 0};
        s.f = std::min(s.d, s.e) > 0 ? trial % (std::min(s.d, s.e) + 1) : 0;
        Angles1 a{angle(rng), angle(rng)};
        double base = edge_expectation(s, a);
        ASSERT_NEAR(edge_expectation(s, {a.gamma + 2 * kPi, a.beta}), base, 1e-12);
        ASSERT_NEAR(edge_expectation(s, {a.gamma, a.beta + kPi}), base, 1e-12);
    }
}

TEST(analytic, bounded_on_dense_grid) {
    for (int chi = 0; chi <= 1; ++chi) {
        for (int d = 0; d <= 7; ++d) {
            for (int e = 0; e <= 7; ++e) {
                for (int f = 0; f <= std::min(d, e); ++f) {
                    for (int i = 0; i < 40; ++i) {
                        for (int j = 0; j < 40; ++j) {
                            double v = edge_expectation({chi, d, e, f}, {2 * kPi * i / 40, kPi * j / 40});
                            ASSERT_GE(v, -1e-12);
                            ASSERT_LE(v, 1 + 1e-12);
                        }
                    }
                }
            }
        }
    }
}

TEST(analytic, grouped_evaluator_matches_edge_sum) {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + trial % 9;
        Graph g = random_graph(rng, n, 0.5);
        Graph op = random_graph(rng, n, 0.5);
        P1Expectation closed(g, op);
        for (int k = 0; k < 5; ++k) {
            Angles1 a{angle(rng), angle(rng)};
            ASSERT_NEAR(closed(a), total_expectation(g, op, a), 1e-12);
        }
    }
}
