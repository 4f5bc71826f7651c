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

#ifndef PHASEOP_OPTIMIZER_H
#define PHASEOP_OPTIMIZER_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phaseop/graph.h"
#include "phaseop/simulator.h"

namespace phaseop {

/// Multi-start settings. Random starts are drawn uniformly from the angle box
/// gamma in [0, 2 pi), beta in [0, pi).
struct OptimizeConfig {
    std::size_t n_starts = 100;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 500;
    double gradient_tolerance = 1e-8;
    /// At depth 1, evaluate the closed form instead of the statevector.
    bool analytic_p1 = true;
    /// Extra starting schedules run after the random starts. Each must have
    /// the requested depth.
    std::vector<AngleSchedule> warm_starts;

    void validate() const;
};

struct OptimizeResult {
    double best_value = 0;
    /// Angles reduced into the box.
    AngleSchedule best_schedule;
    std::size_t best_start = 0;
    std::size_t starts_converged = 0;
    /// Objective evaluations, counting each finite-difference probe.
    std::size_t evaluations = 0;
};

/// Maximizes the expected cut of `cost_graph` over depth-p schedules for the
/// circuit whose phase operator is built from `op_graph`. Deterministic in
/// cfg.seed. Ties between starts go to the lower start index.
OptimizeResult optimize(const Graph &cost_graph, const Graph &op_graph, std::size_t p, const OptimizeConfig &cfg);

/// Best closed-form depth-1 value over the resolution x resolution grid
/// gamma = 2 pi i / resolution, beta = pi j / resolution.
double grid_reference(const Graph &cost_graph, const Graph &op_graph, std::size_t resolution);

/// Reduces every gamma into [0, 2 pi) and every beta into [0, pi).
AngleSchedule wrap_to_box(const AngleSchedule &schedule);

}  // namespace phaseop

#endif
