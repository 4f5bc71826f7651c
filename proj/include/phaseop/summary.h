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

#ifndef PHASEOP_SUMMARY_H
#define PHASEOP_SUMMARY_H

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phaseop/experiment.h"

namespace phaseop {

/// Tie tolerance for "strictly better than standard".
inline constexpr double kBetterTolerance = 1e-9;

/// Five-number summary plus mean. Quartiles interpolate linearly between
/// order statistics.
struct BoxStats {
    std::size_t count = 0;
    double mean = 0;
    double min = 0;
    double q1 = 0;
    double median = 0;
    double q3 = 0;
    double max = 0;
};

BoxStats box_stats(std::vector<double> values);

struct StrategySummary {
    std::string strategy;
    std::size_t p = 0;
    /// Distribution over graphs of the best AR among the strategy's instances.
    BoxStats best_ar;
    std::size_t graphs = 0;
    std::size_t graphs_better = 0;
    double percent_better = 0;
};

/// Pooled over a family: a graph counts as better if any strategy of the
/// family beats standard on it.
struct FamilySummary {
    std::string family;
    std::size_t p = 0;
    std::size_t graphs = 0;
    std::size_t graphs_better = 0;
    double percent_better = 0;
};

struct SummaryStats {
    std::vector<StrategySummary> strategies;
    std::vector<FamilySummary> families;
};

/// best[(strategy, p)][graph_index] = max AR over that strategy's ok instances.
using BestArTable = std::map<std::pair<std::string, std::size_t>, std::map<std::size_t, double>>;
BestArTable best_ar_table(std::span<const ExperimentRecord> records);

/// percent_better fields are fractions in [0, 1]. Throws std::domain_error if
/// some (graph, p) has strategy results but no successful standard baseline.
SummaryStats summarize(std::span<const ExperimentRecord> records);

/// CSV: strategy,p,graphs,mean,min,q1,median,q3,max
void write_quartile_table(std::ostream &out, const SummaryStats &stats);
/// CSV: group,kind,p,graphs,graphs_better,percent_better (kind is strategy or family)
void write_percent_better_table(std::ostream &out, const SummaryStats &stats);

}  // namespace phaseop

#endif
