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

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "vqpde/grid.hpp"
#include "vqpde/oracle.hpp"
#include "vqpde/vqls.hpp"

namespace vqpde {

struct StepMetrics {
    long n_function_evals = 0;
    long n_iterations = 0;
    double cost = 0.0;
    double trace_error_vs_oracle = 0.0;
    bool converged = true;
};

/// Quantum solution trajectory plus per-step solver metrics. Snapshots hold
/// the unnormalized real solution vectors, initial condition included.
struct TimeSeries {
    Scheme scheme = Scheme::IE;
    std::vector<Eigen::VectorXd> snapshots; // n_t + 1
    std::vector<StepMetrics> per_step;      // n_t

    double mean_trace_error() const;
    double mean_function_evals() const;
    double mean_iterations() const;
    bool all_converged() const;
};

struct EvolveOptions {
    int layers = 1;
    double tol = 1e-8;
    int max_evals = 10000;
    std::uint64_t seed = 0;
    bool warm_start = true;
};

/// Implicit-Euler system for one step: A = I + delta * A_1d, b = u_k +
/// delta * boundary(t_next). Zero-weight terms are dropped, so delta = 0
/// degenerates to the exact identity system.
std::pair<DecomposedOperator, Eigen::VectorXd>
assemble_ie(const GridSpec &grid, const BoundarySpec &bc,
            const Eigen::VectorXd &u_k, double t_next);

/// Crank-Nicolson system via the source recurrence b_k = 4 u_k - b_prev +
/// delta * (boundary(t_next) + boundary(t_k)); A = 2I + delta * A_1d.
/// b_prev must be the previous step's unnormalized right-hand side
/// (bootstrapped by cn_bootstrap_rhs on the first step).
std::pair<DecomposedOperator, Eigen::VectorXd>
assemble_cn(const GridSpec &grid, const BoundarySpec &bc,
            const Eigen::VectorXd &u_k, const Eigen::VectorXd &b_prev,
            double t_k, double t_next);

/// First Crank-Nicolson right-hand side, assembled densely from
/// (2I - delta A) u0 plus the averaged boundary data.
Eigen::VectorXd cn_bootstrap_rhs(const GridSpec &grid, const BoundarySpec &bc,
                                 const Eigen::VectorXd &u0, double t0,
                                 double t1);

/// Variational time stepping of the 1D heat equation. Each step encodes the
/// normalized source, solves variationally with warm-started parameters, and
/// rescales by the tracked source norm. Trace errors are measured against
/// the classically propagated reference; non-converged solves are flagged in
/// the metrics and the evolution continues.
TimeSeries evolve(const GridSpec &grid, const BoundarySpec &bc,
                  const Eigen::VectorXd &u0, Scheme scheme,
                  const EvolveOptions &options);

/// Implicit-Euler evolution with the combined 2D operator
/// I + delta_x A_x + delta_y A_y.
TimeSeries evolve_2d(const GridSpec &grid, const BoundarySpec2D &bc,
                     const Eigen::VectorXd &u0, const EvolveOptions &options);

/// sqrt(1 - |<psi|u_ref / ||u_ref||>|^2).
double trace_error(const StateVector &psi, const Eigen::VectorXd &u_ref);
double trace_error(const Eigen::VectorXd &u, const Eigen::VectorXd &u_ref);

/// One variational linear step shared by all evolution drivers: encode the
/// normalized source, solve from the warm start, rescale by the source norm
/// and record the trace error against the reference. A zero source
/// short-circuits to the zero solution. theta is updated in place.
struct StepOutcome {
    Eigen::VectorXd u_next;
    StepMetrics metrics;
};
StepOutcome variational_linear_step(const DecomposedOperator &op,
                                    const Eigen::VectorXd &b,
                                    const Eigen::VectorXd &u_ref_next,
                                    AnsatzParams &theta,
                                    const SolveOptions &solve_options);

SolveOptions to_solve_options(const EvolveOptions &options);

/// u(x, t) = sin(pi x / L_x) exp(-D t (pi / L_x)^2).
double exact_heat(double x, double t, double diffusivity, double length_x);

} // namespace vqpde
