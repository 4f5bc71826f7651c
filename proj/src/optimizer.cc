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

#include "phaseop/optimizer.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "phaseop/analytic.h"
#include "phaseop/lbfgs.h"
#include "phaseop/seeding.h"

namespace phaseop {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) {
        r += period;
    }
    return r >= period ? 0.0 : r;
}

}  // namespace

void OptimizeConfig::validate() const {
    if (n_starts < 1 && warm_starts.empty()) {
        throw std::invalid_argument("optimizer needs at least one start");
    }
    if (!(gradient_tolerance > 0)) {
        throw std::invalid_argument("gradient tolerance must be positive");
    }
}

AngleSchedule wrap_to_box(const AngleSchedule &schedule) {
    AngleSchedule out = schedule;
    for (double &g : out.gammas) {
        g = wrap(g, kTwoPi);
    }
    for (double &b : out.betas) {
        b = wrap(b, std::numbers::pi);
    }
    return out;
}

OptimizeResult optimize(const Graph &cost_graph, const Graph &op_graph, std::size_t p, const OptimizeConfig &cfg) {
    if (p < 1) {
        throw std::invalid_argument("depth must be at least 1");
    }
    cfg.validate();
    for (const AngleSchedule &w : cfg.warm_starts) {
        w.validate();
        if (w.depth() != p) {
            throw std::invalid_argument("warm start has depth " + std::to_string(w.depth()) + ", expected " +
                                        std::to_string(p));
        }
    }

    std::function<double(std::span<const double>)> expectation;
    if (p == 1 && cfg.analytic_p1) {
        expectation = [closed = P1Expectation(cost_graph, op_graph)](std::span<const double> x) {
            return closed(Angles1{x[0], x[1]});
        };
    } else {
        expectation = [circuit = QaoaCircuit(cost_graph, op_graph)](std::span<const double> x) {
            return circuit.expectation(AngleSchedule::from_flat(x));
        };
    }

    std::size_t evaluations = 0;
    GradientObjective negated = [&](std::span<const double> x, std::span<double> grad) {
        auto value_at = [&](std::span<const double> y) {
            ++evaluations;
            return -expectation(y);
        };
        std::vector<double> g = central_gradient(value_at, std::vector<double>(x.begin(), x.end()), kGradientStep);
        std::copy(g.begin(), g.end(), grad.begin());
        return value_at(x);
    };

    LbfgsOptions options;
    options.max_iterations = cfg.max_iterations;
    options.gradient_tolerance = cfg.gradient_tolerance;

    OptimizeResult result;
    bool have_best = false;
    const std::size_t total_starts = cfg.n_starts + cfg.warm_starts.size();
    for (std::size_t start = 0; start < total_starts; ++start) {
        std::vector<double> x0;
        if (start < cfg.n_starts) {
            Rng rng(derive_seed({cfg.seed, start}));
            x0.resize(2 * p);
            for (std::size_t i = 0; i < p; ++i) {
                x0[i] = uniform_real(rng, 0, kTwoPi);
            }
            for (std::size_t i = 0; i < p; ++i) {
                x0[p + i] = uniform_real(rng, 0, std::numbers::pi);
            }
        } else {
            x0 = cfg.warm_starts[start - cfg.n_starts].flat();
        }
        LbfgsResult run = lbfgs_minimize(negated, std::move(x0), options);
        result.starts_converged += run.converged;
        const double value = -run.value;
        if (!have_best || value > result.best_value) {
            have_best = true;
            result.best_value = value;
            result.best_schedule = AngleSchedule::from_flat(run.x);
            result.best_start = start;
        }
    }

    result.best_schedule = wrap_to_box(result.best_schedule);
    result.best_value = expectation(result.best_schedule.flat());
    result.evaluations = evaluations + 1;
    return result;
}

double grid_reference(const Graph &cost_graph, const Graph &op_graph, std::size_t resolution) {
    if (resolution < 1) {
        throw std::invalid_argument("grid resolution must be positive");
    }
    P1Expectation closed(cost_graph, op_graph);
    double best = -1;
    for (std::size_t i = 0; i < resolution; ++i) {
        for (std::size_t j = 0; j < resolution; ++j) {
            const double gamma = kTwoPi * static_cast<double>(i) / static_cast<double>(resolution);
            const double beta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(resolution);
            best = std::max(best, closed(Angles1{gamma, beta}));
        }
    }
    return best;
}

}  // namespace phaseop
