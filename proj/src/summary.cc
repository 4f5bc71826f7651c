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

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "phaseop/strategies.h"

namespace phaseop {

namespace {

double quantile(const std::vector<double> &sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::string family_of(const std::string &strategy) {
    return std::string(strategy_family(StrategySpec::parse(strategy).kind));
}

}  // namespace

BoxStats box_stats(std::vector<double> values) {
    BoxStats s;
    s.count = values.size();
    if (values.empty()) {
        return s;
    }
    std::sort(values.begin(), values.end());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    s.min = values.front();
    s.max = values.back();
    s.q1 = quantile(values, 0.25);
    s.median = quantile(values, 0.5);
    s.q3 = quantile(values, 0.75);
    return s;
}

BestArTable best_ar_table(std::span<const ExperimentRecord> records) {
    BestArTable table;
    for (const ExperimentRecord &r : records) {
        if (!r.ok()) {
            continue;
        }
        auto &per_graph = table[{r.strategy, r.p}];
        auto [it, inserted] = per_graph.emplace(r.graph_index, r.approximation_ratio);
        if (!inserted) {
            it->second = std::max(it->second, r.approximation_ratio);
        }
    }
    return table;
}

SummaryStats summarize(std::span<const ExperimentRecord> records) {
    // Strategy order follows first appearance; depths ascend.
    std::vector<std::string> order;
    std::set<std::size_t> depths;
    for (const ExperimentRecord &r : records) {
        if (std::find(order.begin(), order.end(), r.strategy) == order.end()) {
            order.push_back(r.strategy);
        }
        depths.insert(r.p);
    }
    const BestArTable table = best_ar_table(records);

    auto baseline_for = [&](std::size_t p) -> const std::map<std::size_t, double> * {
        auto it = table.find({"standard", p});
        return it == table.end() ? nullptr : &it->second;
    };
    auto require_baseline = [&](std::size_t p, std::size_t graph) {
        const auto *base = baseline_for(p);
        if (!base || !base->contains(graph)) {
            throw std::domain_error("graph " + std::to_string(graph) + " has no standard baseline at p=" +
                                    std::to_string(p));
        }
        return base->at(graph);
    };

    SummaryStats stats;
    std::vector<std::string> families;
    // family -> p -> graph -> better?
    std::map<std::string, std::map<std::size_t, std::map<std::size_t, bool>>> pooled;
    for (const std::string &strategy : order) {
        const std::string family = family_of(strategy);
        if (std::find(families.begin(), families.end(), family) == families.end()) {
            families.push_back(family);
        }
        for (std::size_t p : depths) {
            auto it = table.find({strategy, p});
            if (it == table.end()) {
                continue;
            }
            StrategySummary s;
            s.strategy = strategy;
            s.p = p;
            std::vector<double> values;
            for (const auto &[graph, ar] : it->second) {
                values.push_back(ar);
                const bool better = ar > require_baseline(p, graph) + kBetterTolerance;
                s.graphs_better += better;
                bool &flag = pooled[family][p][graph];
                flag = flag || better;
            }
            s.graphs = values.size();
            s.percent_better = static_cast<double>(s.graphs_better) / static_cast<double>(s.graphs);
            s.best_ar = box_stats(std::move(values));
            stats.strategies.push_back(std::move(s));
        }
    }
    for (const std::string &family : families) {
        for (const auto &[p, graphs] : pooled[family]) {
            FamilySummary f;
            f.family = family;
            f.p = p;
            f.graphs = graphs.size();
            for (const auto &[graph, better] : graphs) {
                f.graphs_better += better;
            }
            f.percent_better = static_cast<double>(f.graphs_better) / static_cast<double>(f.graphs);
            stats.families.push_back(std::move(f));
        }
    }
    return stats;
}

void write_quartile_table(std::ostream &out, const SummaryStats &stats) {
    out << "strategy,p,graphs,mean,min,q1,median,q3,max\n";
    for (const StrategySummary &s : stats.strategies) {
        const BoxStats &b = s.best_ar;
        out << fmt::format("{},{},{},{:.10f},{:.10f},{:.10f},{:.10f},{:.10f},{:.10f}\n", s.strategy, s.p, s.graphs,
                           b.mean, b.min, b.q1, b.median, b.q3, b.max);
    }
}

void write_percent_better_table(std::ostream &out, const SummaryStats &stats) {
    out << "group,kind,p,graphs,graphs_better,percent_better\n";
    for (const StrategySummary &s : stats.strategies) {
        out << fmt::format("{},strategy,{},{},{},{:.6f}\n", s.strategy, s.p, s.graphs, s.graphs_better,
                           100 * s.percent_better);
    }
    for (const FamilySummary &f : stats.families) {
        out << fmt::format("{},family,{},{},{},{:.6f}\n", f.family, f.p, f.graphs, f.graphs_better,
                           100 * f.percent_better);
    }
}

}  // namespace phaseop
