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

#include "phaseop/lbfgs.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <optional>

namespace phaseop {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double max_abs(std::span<const double> a) {
    double m = 0;
    for (double v : a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

struct Point {
    double alpha = 0;
    double value = 0;
    double slope = 0;
    std::vector<double> x;
    std::vector<double> grad;
};

class LineSearch {
   public:
    LineSearch(const GradientObjective &objective, const LbfgsOptions &options, std::span<const double> origin,
               std::span<const double> direction, double value0, double slope0)
        : objective_(objective),
          options_(options),
          origin_(origin),
          direction_(direction),
          value0_(value0),
          slope0_(slope0) {}

    // Returns a point satisfying the strong Wolfe conditions, or the best
    // sufficient-decrease point seen if the step budget runs out.
    std::optional<Point> run(double initial_step) {
        Point prev{0, value0_, slope0_, {}, {}};
        double alpha = initial_step;
        for (std::size_t i = 0; i < options_.max_line_search_steps; ++i) {
            Point cur = evaluate(alpha);
            if (!armijo_ok(cur) || (i > 0 && cur.value >= prev.value)) {
                return zoom(prev, cur);
            }
            if (std::abs(cur.slope) <= -options_.curvature * slope0_) {
                return cur;
            }
            if (cur.slope >= 0) {
                return zoom(cur, prev);
            }
            prev = std::move(cur);
            alpha *= 2;
        }
        return fallback();
    }

    std::size_t evaluations() const { return evaluations_; }

   private:
    bool armijo_ok(const Point &p) const { return p.value <= value0_ + options_.armijo * p.alpha * slope0_; }

    Point evaluate(double alpha) {
        Point p;
        p.alpha = alpha;
        p.x.resize(origin_.size());
        p.grad.resize(origin_.size());
        for (std::size_t i = 0; i < origin_.size(); ++i) {
            p.x[i] = origin_[i] + alpha * direction_[i];
        }
        p.value = objective_(p.x, p.grad);
        p.slope = dot(p.grad, direction_);
        ++evaluations_;
        if (std::isfinite(p.value) && armijo_ok(p) && (!best_ || p.value < best_->value)) {
            best_ = p;
        }
        return p;
    }

    std::optional<Point> zoom(Point lo, Point hi) {
        for (std::size_t i = 0; i < options_.max_line_search_steps; ++i) {
            const double width = hi.alpha - lo.alpha;
            if (std::abs(width) < 1e-16 * std::max(1.0, std::abs(lo.alpha))) {
                break;
            }
            // Minimizer of the quadratic through (lo.value, lo.slope, hi.value),
            // clamped away from the bracket ends.
            double denom = 2 * (hi.value - lo.value - lo.slope * width);
            double alpha = denom > 0 ? lo.alpha - lo.slope * width * width / denom : lo.alpha + 0.5 * width;
            const double a = lo.alpha + 0.1 * width;
            const double b = hi.alpha - 0.1 * width;
            alpha = std::clamp(alpha, std::min(a, b), std::max(a, b));

            Point cur = evaluate(alpha);
            if (!armijo_ok(cur) || cur.value >= lo.value) {
                hi = std::move(cur);
                continue;
            }
            if (std::abs(cur.slope) <= -options_.curvature * slope0_) {
                return cur;
            }
            if (cur.slope * width >= 0) {
                hi = lo;
            }
            lo = std::move(cur);
        }
        return fallback();
    }

    std::optional<Point> fallback() const { return best_; }

    const GradientObjective &objective_;
    const LbfgsOptions &options_;
    std::span<const double> origin_;
    std::span<const double> direction_;
    double value0_;
    double slope0_;
    std::size_t evaluations_ = 0;
    std::optional<Point> best_;
};

}  // namespace

LbfgsResult lbfgs_minimize(const GradientObjective &objective, std::vector<double> x0, const LbfgsOptions &options) {
    const std::size_t dim = x0.size();
    LbfgsResult result;
    result.x = std::move(x0);
    std::vector<double> grad(dim);
    result.value = objective(result.x, grad);
    result.evaluations = 1;

    std::deque<std::vector<double>> s_hist;
    std::deque<std::vector<double>> y_hist;
    std::deque<double> rho_hist;
    std::vector<double> direction(dim);
    std::vector<double> alpha_buf(options.memory);

    while (true) {
        if (max_abs(grad) <= options.gradient_tolerance) {
            result.converged = true;
            break;
        }
        if (result.iterations >= options.max_iterations) {
            break;
        }

        // Two-loop recursion: direction = -H grad.
        for (std::size_t i = 0; i < dim; ++i) {
            direction[i] = -grad[i];
        }
        const std::size_t m = s_hist.size();
        for (std::size_t k = m; k-- > 0;) {
            alpha_buf[k] = rho_hist[k] * dot(s_hist[k], direction);
            for (std::size_t i = 0; i < dim; ++i) {
                direction[i] -= alpha_buf[k] * y_hist[k][i];
            }
        }
        if (m > 0) {
            const double scale = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
            for (double &d : direction) {
                d *= scale;
            }
        }
        for (std::size_t k = 0; k < m; ++k) {
            const double beta = rho_hist[k] * dot(y_hist[k], direction);
            for (std::size_t i = 0; i < dim; ++i) {
                direction[i] += s_hist[k][i] * (alpha_buf[k] - beta);
            }
        }

        double slope = dot(grad, direction);
        if (!(slope < 0)) {
            // Not a descent direction; restart from steepest descent.
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            for (std::size_t i = 0; i < dim; ++i) {
                direction[i] = -grad[i];
            }
            slope = dot(grad, direction);
        }

        const double initial_step = m == 0 ? std::min(1.0, 1.0 / max_abs(grad)) : 1.0;
        LineSearch search(objective, options, result.x, direction, result.value, slope);
        std::optional<Point> next = search.run(initial_step);
        result.evaluations += search.evaluations();
        if (!next) {
            break;
        }

        std::vector<double> s(dim);
        std::vector<double> y(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            s[i] = next->x[i] - result.x[i];
            y[i] = next->grad[i] - grad[i];
        }
        const double decrease = result.value - next->value;
        result.x = std::move(next->x);
        grad = std::move(next->grad);
        result.value = next->value;
        ++result.iterations;

        const double sy = dot(s, y);
        if (sy > 1e-16 * dot(y, y)) {
            if (s_hist.size() == options.memory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            rho_hist.push_back(1.0 / sy);
        }
        if (decrease <= 0) {
            break;
        }
    }
    return result;
}

}  // namespace phaseop
