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

#ifndef PHASEOP_LBFGS_H
#define PHASEOP_LBFGS_H

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace phaseop {

struct LbfgsOptions {
    /// Number of (s, y) correction pairs kept.
    std::size_t memory = 6;
    std::size_t max_iterations = 500;
    /// Stop once the max-norm of the gradient falls below this.
    double gradient_tolerance = 1e-8;
    std::size_t max_line_search_steps = 40;
    /// Strong Wolfe constants.
    double armijo = 1e-4;
    double curvature = 0.9;
};

struct LbfgsResult {
    std::vector<double> x;
    double value = 0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    /// True iff the gradient tolerance was met.
    bool converged = false;
};

/// Objective returning f(x) and writing the gradient into `grad`.
using GradientObjective = std::function<double(std::span<const double> x, std::span<double> grad)>;

/// Unconstrained limited-memory BFGS minimization with a strong Wolfe line
/// search. The returned value is never above f(x0).
LbfgsResult lbfgs_minimize(const GradientObjective &objective, std::vector<double> x0, const LbfgsOptions &options);

/// Central-difference gradient of a scalar function.
template <class F>
std::vector<double> central_gradient(F &&f, std::vector<double> x, double step) {
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double saved = x[i];
        x[i] = saved + step;
        const double up = f(std::span<const double>(x));
        x[i] = saved - step;
        const double down = f(std::span<const double>(x));
        x[i] = saved;
        grad[i] = (up - down) / (2 * step);
    }
    return grad;
}

}  // namespace phaseop

#endif
