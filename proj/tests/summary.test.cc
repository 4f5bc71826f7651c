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

#include "phaseop/summary.h"

#include <sstream>

#include "gtest/gtest.h"

using namespace phaseop;

namespace {

ExperimentRecord rec(std::size_t graph, const std::string &strategy, std::size_t instance, double ar,
                     std::size_t p = 1) {
    ExperimentRecord r;
    r.graph_index = graph;
    r.strategy = strategy;
    r.instance_index = instance;
    r.p = p;
    r.maxcut = 7;
    r.best_expectation = 7 * ar;
    r.approximation_ratio = ar;
    return r;
}

const StrategySummary &find(const SummaryStats &s, const std::string &name, std::size_t p = 1) {
    for (const auto &x : s.strategies) {
        if (x.strategy == name && x.p == p) {
            return x;
        }
    }
    throw std::out_of_range(name);
}

}  // namespace

TEST(summary, perfect_subgraph_beats_baseline) {
    std::vector<ExperimentRecord> records{rec(0, "standard", 0, 0.934), rec(0, "sub-1/2", 0, 0.8),
                                          rec(0, "sub-1/2", 1, 1.0)};
    SummaryStats s = summarize(records);
    ASSERT_EQ(find(s, "sub-1/2").percent_better, 1.0);
    ASSERT_EQ(find(s, "sub-1/2").best_ar.max, 1.0);
    ASSERT_EQ(find(s, "standard").percent_better, 0.0);
}

TEST(summary, ties_are_not_better) {
    std::vector<ExperimentRecord> records{rec(0, "standard", 0, 0.9), rec(0, "tr-most", 0, 0.9 + 5e-10),
                                          rec(1, "standard", 0, 0.8), rec(1, "tr-most", 0, 0.8)};
    ASSERT_EQ(find(summarize(records), "tr-most").percent_better, 0.0);
}

TEST(summary, half_of_two_graphs) {
    std::vector<ExperimentRecord> records{rec(0, "standard", 0, 0.9), rec(0, "random", 0, 0.95),
                                          rec(1, "standard", 0, 0.9), rec(1, "random", 0, 0.85)};
    ASSERT_EQ(find(summarize(records), "random").percent_better, 0.5);
}

TEST(summary, families_pool_strategies) {
    std::vector<ExperimentRecord> records{
        rec(0, "standard", 0, 0.9), rec(0, "tr-most", 0, 0.95), rec(0, "tr-all", 0, 0.85),
        rec(1, "standard", 0, 0.9), rec(1, "tr-most", 0, 0.85), rec(1, "tr-all", 0, 0.95),
        rec(2, "standard", 0, 0.9), rec(2, "tr-most", 0, 0.85), rec(2, "tr-all", 0, 0.85),
    };
    SummaryStats s = summarize(records);
    ASSERT_NEAR(find(s, "tr-most").percent_better, 1.0 / 3, 1e-15);
    const FamilySummary *tr = nullptr;
    for (const auto &f : s.families) {
        if (f.family == "tr") {
            tr = &f;
        }
    }
    ASSERT_NE(tr, nullptr);
    ASSERT_EQ(tr->graphs, 3u);
    ASSERT_EQ(tr->graphs_better, 2u);
}

TEST(summary, missing_baseline_is_an_error) {
    std::vector<ExperimentRecord> records{rec(0, "standard", 0, 0.9), rec(1, "random", 0, 0.8)};
    ASSERT_THROW(summarize(records), std::domain_error);
    std::vector<ExperimentRecord> wrong_depth{rec(0, "standard", 0, 0.9, 1), rec(0, "random", 0, 0.8, 2)};
    ASSERT_THROW(summarize(wrong_depth), std::domain_error);
}

TEST(summary, error_rows_are_skipped) {
    ExperimentRecord failed = rec(0, "random", 1, 0.99);
    failed.status = "error: boom";
    std::vector<ExperimentRecord> records{rec(0, "standard", 0, 0.9), rec(0, "random", 0, 0.8), failed};
    ASSERT_EQ(find(summarize(records), "random").best_ar.max, 0.8);
}

TEST(summary, best_of_instances_dominates_each_instance) {
    std::vector<ExperimentRecord> records{rec(0, "standard", 0, 0.9), rec(0, "sub-1/4", 0, 0.7),
                                          rec(0, "sub-1/4", 1, 0.75), rec(0, "sub-1/4", 2, 0.72)};
    BestArTable table = best_ar_table(records);
    double best = table.at({"sub-1/4", 1}).at(0);
    for (const auto &r : records) {
        if (r.strategy == "sub-1/4") {
            ASSERT_GE(best, r.approximation_ratio);
        }
    }
}

TEST(summary, box_stats_interpolate) {
    BoxStats b = box_stats({4, 1, 3, 2});
    ASSERT_EQ(b.count, 4u);
    ASSERT_DOUBLE_EQ(b.mean, 2.5);
    ASSERT_DOUBLE_EQ(b.min, 1);
    ASSERT_DOUBLE_EQ(b.q1, 1.75);
    ASSERT_DOUBLE_EQ(b.median, 2.5);
    ASSERT_DOUBLE_EQ(b.q3, 3.25);
    ASSERT_DOUBLE_EQ(b.max, 4);
    ASSERT_EQ(box_stats({}).count, 0u);
    ASSERT_EQ(box_stats({0.7}).median, 0.7);
}

TEST(summary, tables_have_expected_shape) {
    std::vector<ExperimentRecord> records{rec(0, "standard", 0, 0.9), rec(0, "mder-1", 0, 0.95)};
    SummaryStats s = summarize(records);
    std::ostringstream q;
    std::ostringstream p;
    write_quartile_table(q, s);
    write_percent_better_table(p, s);
    ASSERT_EQ(q.str().substr(0, q.str().find('\n')), "strategy,p,graphs,mean,min,q1,median,q3,max");
    ASSERT_NE(q.str().find("mder-1,1,1,0.95"), std::string::npos);
    ASSERT_NE(p.str().find("mder-1,strategy,1,1,1,100.000000"), std::string::npos);
    ASSERT_NE(p.str().find("mder,family,1,1,1,100.000000"), std::string::npos);
}
