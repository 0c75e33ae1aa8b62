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
#pragma once

#include <functional>

#include <Eigen/Dense>

namespace vqpde {

/// Objective callback: returns f(x) and fills grad (same size as x).
using ObjectiveFn =
    std::function<double(const Eigen::VectorXd &x, Eigen::VectorXd &grad)>;

struct LbfgsOptions {
    double f_tol = 1e-8;    // |f_k - f_{k-1}| threshold
    double grad_tol = 1e-8; // gradient infinity-norm threshold
    int max_evals = 10000;  // objective evaluation budget
    int memory = 10;        // stored correction pairs
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.9;
};

struct LbfgsResult {
    Eigen::VectorXd x;
    double f = 0.0;
    long n_evals = 0;      // objective callbacks consumed
    long n_iterations = 0; // accepted quasi-Newton steps
    bool converged = false;
};

/// Limited-memory BFGS with a strong-Wolfe line search. Converged when both
/// the cost decrease and the gradient infinity-norm fall under their
/// thresholds; exceeding the evaluation budget returns a flagged result, not
/// an error.
LbfgsResult lbfgs_minimize(const ObjectiveFn &objective, Eigen::VectorXd x0,
                           const LbfgsOptions &options = {});

} // namespace vqpde
