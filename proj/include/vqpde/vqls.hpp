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

#include <random>

#include <Eigen/Dense>

#include "vqpde/operators.hpp"
#include "vqpde/state.hpp"

namespace vqpde {

/// Rotation angles of the hardware-efficient ansatz: per layer, one RY gate
/// on every wire followed by the linear CX ladder descending from the top
/// wire. Wire w corresponds to qubit n-1-w (the top wire carries the most
/// significant basis bit), so theta(l, 0) rotates the top wire.
struct AnsatzParams {
    int n_qubits = 0;
    int layers = 0;
    Eigen::MatrixXd theta; // layers x wires, radians

    static AnsatzParams zero(int n_qubits, int layers);
    /// Angles drawn uniformly from [0, 2*pi).
    static AnsatzParams random(int n_qubits, int layers, std::mt19937_64 &rng);

    int parameter_count() const { return layers * n_qubits; }
    Eigen::VectorXd flatten() const;
    static AnsatzParams from_flat(int n_qubits, int layers,
                                  const Eigen::VectorXd &values);
    /// Suggested minimum depth 2^n / n for full expressivity.
    static double min_layers(int n_qubits);
};

struct SolveOptions {
    double tol = 1e-8;     // cost-change and gradient thresholds
    int max_evals = 10000; // optimizer evaluation budget per solve
    int lbfgs_memory = 10;
    bool use_superposition_overlap = false; // verification mode for the norm
};

/// Converged variational solve: solution == r_opt * amplitudes of
/// prepare_ansatz(theta_opt). n_function_evals counts quantum-circuit
/// executions: a cost evaluation costs one circuit per Hamiltonian term plus
/// two overlap circuits, and a gradient evaluation repeats that per
/// parameter.
struct SolveResult {
    AnsatzParams theta_opt;
    double r_opt = 0.0;
    Eigen::VectorXd solution;
    double cost = 0.0;
    long n_function_evals = 0;
    long n_iterations = 0;
    bool converged = false;
};

StateVector prepare_ansatz(const AnsatzParams &params);

/// E = -1/2 |<psi(theta)|b>|^2 / <psi(theta)|A|psi(theta)>; never positive
/// where the denominator is positive.
double cost(const AnsatzParams &params, const DecomposedOperator &A,
            const StateVector &b);

/// r = |<psi|b>| / <psi|A|psi>. The overlap uses the direct inner product by
/// default; the superposition-circuit route is available for verification.
double norm_r(const AnsatzParams &params, const DecomposedOperator &A,
              const StateVector &b, bool use_superposition = false);

/// Exact statevector gradient of the cost via derivative states
/// (d/dtheta RY(theta) = RY(theta + pi) / 2).
Eigen::VectorXd gradient(const AnsatzParams &params,
                         const DecomposedOperator &A, const StateVector &b);

/// Parameter-shift evaluation of the same gradient (verification mode).
Eigen::VectorXd gradient_parameter_shift(const AnsatzParams &params,
                                         const DecomposedOperator &A,
                                         const StateVector &b);

/// Quasi-Newton minimization of the cost from the warm start theta0. A
/// depleted evaluation budget yields converged == false, not an exception.
/// The recovered solution's sign is gauged to maximize overlap with b (a
/// 2*pi angle offset folds the global sign into theta_opt).
SolveResult vqls_solve(const DecomposedOperator &A, const StateVector &b,
                       const AnsatzParams &theta0,
                       const SolveOptions &options = {});

} // namespace vqpde
