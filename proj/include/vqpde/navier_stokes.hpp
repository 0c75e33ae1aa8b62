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

#include <vector>

#include <Eigen/Dense>

#include "vqpde/evolution.hpp"

namespace vqpde {

/// Collocated-grid flow field on 2^(mx+my) nodes, row-major with x fastest.
/// The moving lid is the y-low wall; all other walls are no-slip.
struct FlowState {
    GridSpec grid;
    double reynolds = 1.0;
    Eigen::VectorXd u, v, p;

    static FlowState rest(const GridSpec &grid, double reynolds);
};

/// Dense central-difference divergence/gradient operators on the 2D grid;
/// used classically for right-hand sides and velocity updates.
struct NSMatrices {
    Eigen::MatrixXd bx_dirichlet, by_dirichlet;
    Eigen::MatrixXd bx_neumann, by_neumann;
};
NSMatrices ns_matrices(const GridSpec &grid);

/// Viscous diffusion parameters dt / (Re dx^2), dt / (Re dy^2).
std::pair<double, double> ns_deltas(const GridSpec &grid, double reynolds);

/// Semi-implicit Burgers predictor: one operator shared by both velocity
/// components, right-hand sides (1 - dt F) u + viscous boundary terms with
/// F = diag(u) B_x + diag(v) B_y applied classically.
struct PredictorSystem {
    DecomposedOperator op;
    Eigen::VectorXd b_u, b_v;
};
PredictorSystem assemble_predictor(const FlowState &state,
                                   double lid_velocity);

/// Regularized pressure Poisson system: Neumann Laplacians per axis plus the
/// rank-fixing |0...0><0...0| term; right-hand side is the negative discrete
/// divergence of the intermediate velocity.
std::pair<DecomposedOperator, Eigen::VectorXd>
assemble_corrector(const Eigen::VectorXd &u_star, const Eigen::VectorXd &v_star,
                   const GridSpec &grid);

/// u <- u* - dt * B_N p per component.
std::pair<Eigen::VectorXd, Eigen::VectorXd>
velocity_update(const Eigen::VectorXd &u_star, const Eigen::VectorXd &v_star,
                const Eigen::VectorXd &p_next, const GridSpec &grid);

/// || B_x u + B_y v ||_2 with the Dirichlet divergence operators.
double divergence_norm(const Eigen::VectorXd &u, const Eigen::VectorXd &v,
                       const GridSpec &grid);

struct NSSolveStats {
    long n_function_evals = 0;
    long n_iterations = 0;
    double cost = 0.0;
    double trace_error_vs_oracle = 0.0;
    bool converged = true;
};

struct NSStepMetrics {
    NSSolveStats u, v, p;
    double divergence_pre = 0.0;  // of (u*, v*)
    double divergence_post = 0.0; // after the velocity update
};

struct NSRun {
    std::vector<FlowState> states; // n_t + 1
    std::vector<NSStepMetrics> per_step;
};

/// Projection-method evolution: two predictor solves and one corrector solve
/// per step, each variational with its own warm-started parameters; function
/// evaluation counters are kept per solve. Trace errors compare against the
/// classically propagated projection twin (pressure compared mean-free).
NSRun evolve_ns(const FlowState &initial, double lid_velocity, int n_t,
                const EvolveOptions &options);

/// Dense twin of one projection step (LU in place of the variational solve).
FlowState classical_projection_step(const FlowState &state,
                                    double lid_velocity);

} // namespace vqpde
