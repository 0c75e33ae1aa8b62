// Copyright 2026 The vqpde Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "vqpde/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

namespace vqpde {

namespace {

struct Correction {
    Eigen::VectorXd s;
    Eigen::VectorXd y;
    double rho;
};

// Two-loop recursion; H0 scaled by the latest curvature pair.
Eigen::VectorXd two_loop_direction(const std::deque<Correction> &mem,
                                   const Eigen::VectorXd &grad) {
    Eigen::VectorXd q = -grad;
    std::vector<double> alpha(mem.size());
    for (std::size_t i = mem.size(); i-- > 0;) {
        alpha[i] = mem[i].rho * mem[i].s.dot(q);
        q -= alpha[i] * mem[i].y;
    }
    if (!mem.empty()) {
        const auto &last = mem.back();
        q *= last.s.dot(last.y) / last.y.squaredNorm();
    }
    for (std::size_t i = 0; i < mem.size(); ++i) {
        const double beta = mem[i].rho * mem[i].y.dot(q);
        q += (alpha[i] - beta) * mem[i].s;
    }
    return q;
}

struct LineSearchState {
    const ObjectiveFn &objective;
    const Eigen::VectorXd &x0;
    const Eigen::VectorXd &dir;
    long &evals;
    long eval_budget;

    double eval(double step, Eigen::VectorXd &x, Eigen::VectorXd &grad,
                double &slope) {
        x = x0 + step * dir;
        ++evals;
        const double f = objective(x, grad);
        slope = grad.dot(dir);
        return f;
    }
    bool budget_left() const { return evals < eval_budget; }
};

// Strong Wolfe line search (bracket + zoom, bisection refinement). Returns
// the accepted step or 0 on failure.
double wolfe_search(LineSearchState &ls, double f0, double slope0,
                    const LbfgsOptions &opt, double &f_out,
                    Eigen::VectorXd &x_out, Eigen::VectorXd &g_out) {
    const double c1 = opt.wolfe_c1;
    const double c2 = opt.wolfe_c2;
    double step_prev = 0.0;
    double f_prev = f0;
    double step = 1.0;
    const double step_max = 1e8;

    Eigen::VectorXd x;
    Eigen::VectorXd g(ls.x0.size());

    double lo = 0.0, hi = 0.0, f_lo = f0;
    bool bracketed = false;

    for (int iter = 0; iter < 20 && ls.budget_left(); ++iter) {
        double slope;
        const double f = ls.eval(step, x, g, slope);
        if (f > f0 + c1 * step * slope0 || (iter > 0 && f >= f_prev)) {
            lo = step_prev;
            hi = step;
            f_lo = f_prev;
            bracketed = true;
            break;
        }
        if (std::abs(slope) <= -c2 * slope0) {
            f_out = f;
            x_out = x;
            g_out = g;
            return step;
        }
        if (slope >= 0.0) {
            lo = step;
            hi = step_prev;
            f_lo = f;
            bracketed = true;
            break;
        }
        step_prev = step;
        f_prev = f;
        step = std::min(2.0 * step, step_max);
    }
    if (!bracketed) {
        return 0.0;
    }

    // Zoom phase.
    for (int iter = 0; iter < 30 && ls.budget_left(); ++iter) {
        const double mid = 0.5 * (lo + hi);
        double slope;
        const double f = ls.eval(mid, x, g, slope);
        if (f > f0 + c1 * mid * slope0 || f >= f_lo) {
            hi = mid;
        } else {
            if (std::abs(slope) <= -c2 * slope0) {
                f_out = f;
                x_out = x;
                g_out = g;
                return mid;
            }
            if (slope * (hi - lo) >= 0.0) {
                hi = lo;
            }
            lo = mid;
            f_lo = f;
        }
        if (std::abs(hi - lo) < 1e-16 * std::max(1.0, std::abs(lo))) {
            break;
        }
    }
    // Accept a plain decrease if the curvature condition never held.
    if (f_lo < f0 && lo > 0.0) {
        double slope;
        f_out = ls.eval(lo, x, g, slope);
        x_out = x;
        g_out = g;
        return lo;
    }
    return 0.0;
}

} // namespace

LbfgsResult lbfgs_minimize(const ObjectiveFn &objective, Eigen::VectorXd x0,
                           const LbfgsOptions &options) {
    LbfgsResult result;
    result.x = std::move(x0);
    const Eigen::Index dim = result.x.size();

    Eigen::VectorXd grad(dim);
    ++result.n_evals;
    result.f = objective(result.x, grad);
    if (grad.lpNorm<Eigen::Infinity>() < options.grad_tol) {
        result.converged = true;
        return result;
    }

    std::deque<Correction> memory;
    bool tried_restart = false;

    while (result.n_evals < options.max_evals) {
        Eigen::VectorXd dir = two_loop_direction(memory, grad);
        double slope = grad.dot(dir);
        if (!(slope < 0.0)) {
            // Not a descent direction; fall back to steepest descent.
            memory.clear();
            dir = -grad;
            slope = grad.dot(dir);
            if (!(slope < 0.0)) {
                break;
            }
        }

        LineSearchState ls{objective, result.x, dir, result.n_evals,
                           options.max_evals};
        double f_new = 0.0;
        Eigen::VectorXd x_new;
        Eigen::VectorXd g_new(dim);
        const double step =
            wolfe_search(ls, result.f, slope, options, f_new, x_new, g_new);
        if (step == 0.0) {
            if (!tried_restart && !memory.empty()) {
                // Stale curvature pairs can poison the direction; retry once
                // from steepest descent.
                memory.clear();
                tried_restart = true;
                continue;
            }
            break;
        }
        tried_restart = false;

        Correction corr;
        corr.s = x_new - result.x;
        corr.y = g_new - grad;
        const double sy = corr.s.dot(corr.y);
        if (sy > 1e-14 * corr.s.norm() * corr.y.norm()) {
            corr.rho = 1.0 / sy;
            memory.push_back(std::move(corr));
            if (static_cast<int>(memory.size()) > options.memory) {
                memory.pop_front();
            }
        }

        const double f_delta = std::abs(result.f - f_new);
        result.x = std::move(x_new);
        result.f = f_new;
        grad = std::move(g_new);
        ++result.n_iterations;

        if (f_delta < options.f_tol &&
            grad.lpNorm<Eigen::Infinity>() < options.grad_tol) {
            result.converged = true;
            return result;
        }
    }

    result.converged = grad.lpNorm<Eigen::Infinity>() < options.grad_tol;
    return result;
}

} // namespace vqpde
