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

#ifndef PHASEOP_EXPERIMENT_H
#define PHASEOP_EXPERIMENT_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "phaseop/graph6.h"
#include "phaseop/optimizer.h"
#include "phaseop/strategies.h"

namespace phaseop {

/// One batch run over a graph6 corpus.
///
/// Depth 1 runs on every selected graph. Depths >= 2 run on a seeded subset
/// of `high_depth_subsample` graphs with `high_depth_starts` random starts,
/// which keeps p = 2, 3 sweeps affordable on a workstation.
struct ExperimentConfig {
    std::filesystem::path input_path;
    /// The standard strategy is always evaluated first, whether listed or not.
    std::vector<StrategySpec> strategies;
    std::vector<std::size_t> depths{1};
    OptimizeConfig optimizer;
    std::uint64_t master_seed = 0;
    std::size_t parallelism = 1;
    bool connected_only = true;
    std::size_t max_instances = 10;
    /// Seeded subsample of eligible graphs; 0 keeps all of them.
    std::size_t subsample = 0;
    /// Graphs (from the selection above) evaluated at depth >= 2; 0 keeps all.
    std::size_t high_depth_subsample = 200;
    std::size_t high_depth_starts = 30;
    /// Seed each depth's optimization with the previous depth's best angles,
    /// padded with a zero layer, as one extra start.
    bool warm_start_depths = true;

    void validate() const;
};

/// Parses a JSON config. Unknown keys are rejected. A relative input_path is
/// resolved against `base_dir`.
ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path &base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path &path);

/// Resolved configuration plus fixed conventions, as a JSON document.
std::string experiment_metadata_json(const ExperimentConfig &cfg);

struct ExperimentRecord {
    std::size_t graph_index = 0;
    std::string graph6;
    std::string strategy;
    std::size_t instance_index = 0;
    std::size_t p = 0;
    int maxcut = 0;
    std::size_t operator_edges = 0;
    double best_expectation = 0;
    double approximation_ratio = 0;
    std::vector<double> best_angles;
    std::uint64_t seed_used = 0;
    /// "ok", or "error: <message>" for a task that failed.
    std::string status = "ok";

    bool ok() const { return status == "ok"; }
};

inline constexpr std::string_view kRecordCsvHeader =
    "graph_index,graph6,strategy,instance_index,p,maxcut,operator_edges,best_expectation,approximation_ratio,"
    "best_angles,seed_used,status";

void write_record_csv(std::ostream &out, const ExperimentRecord &record);
/// Reads a records CSV including its header line.
std::vector<ExperimentRecord> read_records_csv(std::istream &in);

using RecordSink = std::function<void(const ExperimentRecord &)>;

/// Graph indices (positions in the corpus) that the run will evaluate, and
/// the subset evaluated at depth >= 2.
struct GraphSelection {
    std::vector<std::size_t> all;
    std::vector<std::size_t> high_depth;
};
GraphSelection select_graphs(const ExperimentConfig &cfg, const std::vector<Graph6Entry> &corpus);

/// Seed for instance generation of one (graph, strategy).
std::uint64_t generation_seed(std::uint64_t master_seed, std::size_t graph_index, std::string_view strategy);
/// Seed for the optimizer of one (graph, strategy, instance, depth) task.
std::uint64_t task_seed(std::uint64_t master_seed, std::size_t graph_index, std::string_view strategy,
                        std::size_t instance_index, std::size_t p);

/// Runs the corpus and delivers records to `sink` ordered by
/// (graph, strategy, instance, depth), independent of cfg.parallelism.
/// Per-task failures become error rows; the run continues.
void run_experiment(const ExperimentConfig &cfg, const std::vector<Graph6Entry> &corpus, const RecordSink &sink);

/// Reads cfg.input_path and runs it. Throws if the input cannot be read.
void run_experiment(const ExperimentConfig &cfg, const RecordSink &sink);

}  // namespace phaseop

#endif
