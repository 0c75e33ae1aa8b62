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
#include "vqpde/reaction_diffusion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/LU>
#include <unsupported/Eigen/KroneckerProduct>

namespace vqpde {

namespace {

void check_pair(const Eigen::VectorXd &u1, const Eigen::VectorXd &u2) {
    if (u1.size() != u2.size()) {
        throw std::invalid_argument("component length mismatch");
    }
}

} // namespace

ComponentPair gray_scott_source(const Eigen::VectorXd &u1,
                                const Eigen::VectorXd &u2, double k1,
                                double k2) {
    check_pair(u1, u2);
    const Eigen::VectorXd uvv = u1.array() * u2.array().square();
    Eigen::VectorXd f1 = k1 * (1.0 - u1.array()) - uvv.array();
    Eigen::VectorXd f2 = -(k1 + k2) * u2.array() + uvv.array();
    return {std::move(f1), std::move(f2)};
}

ComponentPair brusselator_source(const Eigen::VectorXd &u1,
                                 const Eigen::VectorXd &u2, double k1,
                                 double k2) {
    check_pair(u1, u2);
    const Eigen::VectorXd uuv = u1.array().square() * u2.array();
    Eigen::VectorXd f1 = -(k1 + 1.0) * u1.array() + uuv.array() + k2;
    Eigen::VectorXd f2 = k1 * u1.array() - uuv.array();
    return {std::move(f1), std::move(f2)};
}

Eigen::Vector2d rd_diffusion_parameters(const RDSystem &system,
                                        const GridSpec &grid) {
    const double scale =
        std::pow(2.0, 2.0 * grid.n_qubits()) * grid.dt;
    return scale * system.diffusivity;
}

ComponentPair gray_scott_initial(const GridSpec &grid) {
    const Eigen::Index n = grid.points();
    Eigen::VectorXd u1(n);
    Eigen::VectorXd u2(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        // |sin|^100 evaluated through exp/log keeps tiny values clean.
        const double s = std::abs(std::sin(std::numbers::pi * grid.x_of(i)));
        const double pulse = s > 0.0 ? std::exp(100.0 * std::log(s)) : 0.0;
        u1(i) = 1.0 - 0.5 * pulse;
        u2(i) = 0.25 * pulse;
    }
    return {std::move(u1), std::move(u2)};
}

RDOracleRun evolve_rd_oracle(const RDSystem &system, const GridSpec &grid,
                             const ComponentPair &u0) {
    const Eigen::Index n = grid.points();
    check_pair(u0.first, u0.second);
    if (u0.first.size() != n) {
        throw std::invalid_argument("initial condition size mismatch");
    }
    const Eigen::Vector2d delta = rd_diffusion_parameters(system, grid);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
    const Eigen::FullPivLU<Eigen::MatrixXd> lu1(
        eye + delta(0) * laplacian_1d_dense(grid.mx, system.bc1.kind));
    const Eigen::FullPivLU<Eigen::MatrixXd> lu2(
        eye + delta(1) * laplacian_1d_dense(grid.mx, system.bc2.kind));

    RDOracleRun run;
    run.u1.push_back(u0.first);
    run.u2.push_back(u0.second);
    Eigen::VectorXd u1 = u0.first;
    Eigen::VectorXd u2 = u0.second;
    for (int k = 0; k < grid.n_t; ++k) {
        const double t_next = (k + 1) * grid.dt;
        const auto [f1, f2] = system.source(u1, u2);
        const Eigen::VectorXd b1 =
            u1 + delta(0) * system.bc1.boundary_vector(t_next, n) +
            grid.dt * f1;
        const Eigen::VectorXd b2 =
            u2 + delta(1) * system.bc2.boundary_vector(t_next, n) +
            grid.dt * f2;
        u1 = lu1.solve(b1);
        u2 = lu2.solve(b2);
        run.u1.push_back(u1);
        run.u2.push_back(u2);
    }
    return run;
}

std::pair<TimeSeries, TimeSeries> evolve_rd(const RDSystem &system,
                                            const GridSpec &grid,
                                            const ComponentPair &u0,
                                            const EvolveOptions &options) {
    const Eigen::Index n = grid.points();
    check_pair(u0.first, u0.second);
    if (u0.first.size() != n) {
        throw std::invalid_argument("initial condition size mismatch");
    }
    const Eigen::Vector2d delta = rd_diffusion_parameters(system, grid);
    const DecomposedOperator op1 = add_identity(
        scale_operator(decompose_laplacian_1d(grid.mx, system.bc1.kind),
                       delta(0)),
        1.0);
    const DecomposedOperator op2 = add_identity(
        scale_operator(decompose_laplacian_1d(grid.mx, system.bc2.kind),
                       delta(1)),
        1.0);

    const RDOracleRun oracle = evolve_rd_oracle(system, grid, u0);
    std::mt19937_64 rng(options.seed);
    AnsatzParams theta1 =
        AnsatzParams::random(grid.n_qubits(), options.layers, rng);
    AnsatzParams theta2 =
        AnsatzParams::random(grid.n_qubits(), options.layers, rng);
    const SolveOptions solve_opts = to_solve_options(options);

    TimeSeries series1;
    TimeSeries series2;
    series1.snapshots.push_back(u0.first);
    series2.snapshots.push_back(u0.second);
    Eigen::VectorXd u1 = u0.first;
    Eigen::VectorXd u2 = u0.second;

    for (int k = 0; k < grid.n_t; ++k) {
        const double t_next = (k + 1) * grid.dt;
        // Both components see the same frozen state (Jacobi-style coupling).
        const auto [f1, f2] = system.source(u1, u2);
        const Eigen::VectorXd b1 =
            u1 + delta(0) * system.bc1.boundary_vector(t_next, n) +
            grid.dt * f1;
        const Eigen::VectorXd b2 =
            u2 + delta(1) * system.bc2.boundary_vector(t_next, n) +
            grid.dt * f2;
        if (!options.warm_start && k > 0) {
            theta1 = AnsatzParams::random(grid.n_qubits(), options.layers,
                                          rng);
            theta2 = AnsatzParams::random(grid.n_qubits(), options.layers,
                                          rng);
        }
        StepOutcome s1 = variational_linear_step(op1, b1, oracle.u1[k + 1],
                                                 theta1, solve_opts);
        StepOutcome s2 = variational_linear_step(op2, b2, oracle.u2[k + 1],
                                                 theta2, solve_opts);
        u1 = std::move(s1.u_next);
        u2 = std::move(s2.u_next);
        series1.snapshots.push_back(u1);
        series2.snapshots.push_back(u2);
        series1.per_step.push_back(s1.metrics);
        series2.per_step.push_back(s2.metrics);
    }
    return {std::move(series1), std::move(series2)};
}

namespace {

void check_implicit_inputs(const Eigen::Matrix2d &K, const BoundarySpec &bc1,
                           const BoundarySpec &bc2) {
    if (std::abs(K(0, 1) - K(1, 0)) >
        1e-12 * std::max(1.0, K.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("fully implicit path requires K = K^T");
    }
    if (bc1.kind != bc2.kind) {
        throw std::invalid_argument(
            "fully implicit path uses one boundary kind for both components");
    }
}

Eigen::VectorXd stacked_rhs(const GridSpec &grid, const BoundarySpec &bc1,
                            const BoundarySpec &bc2, const Eigen::VectorXd &u1,
                            const Eigen::VectorXd &u2, double delta,
                            double t_next) {
    const Eigen::Index n = grid.points();
    Eigen::VectorXd b(2 * n);
    b.head(n) = u1 + delta * bc1.boundary_vector(t_next, n);
    b.tail(n) = u2 + delta * bc2.boundary_vector(t_next, n);
    return b;
}

} // namespace

std::vector<Eigen::VectorXd> rd_implicit_oracle(const Eigen::Matrix2d &K,
                                                const GridSpec &grid,
                                                const ComponentPair &u0,
                                                const BoundarySpec &bc1,
                                                const BoundarySpec &bc2) {
    check_implicit_inputs(K, bc1, bc2);
    const Eigen::Index n = grid.points();
    const double delta = grid.delta_x;
    const Eigen::MatrixXd a1 = laplacian_1d_dense(grid.mx, bc1.kind);
    const Eigen::MatrixXd lhs =
        Eigen::MatrixXd::Identity(2 * n, 2 * n) +
        delta * Eigen::kroneckerProduct(Eigen::Matrix2d::Identity(), a1) -
        grid.dt *
            Eigen::kroneckerProduct(K, Eigen::MatrixXd::Identity(n, n));
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(lhs);

    std::vector<Eigen::VectorXd> snapshots;
    Eigen::VectorXd u(2 * n);
    u.head(n) = u0.first;
    u.tail(n) = u0.second;
    snapshots.push_back(u);
    for (int k = 0; k < grid.n_t; ++k) {
        const double t_next = (k + 1) * grid.dt;
        u = lu.solve(stacked_rhs(grid, bc1, bc2, u.head(n), u.tail(n), delta,
                                 t_next));
        snapshots.push_back(u);
    }
    return snapshots;
}

TimeSeries evolve_rd_implicit_linear(const Eigen::Matrix2d &K,
                                     const GridSpec &grid,
                                     const ComponentPair &u0,
                                     const BoundarySpec &bc1,
                                     const BoundarySpec &bc2,
                                     const EvolveOptions &options) {
    check_implicit_inputs(K, bc1, bc2);
    check_pair(u0.first, u0.second);
    const Eigen::Index n = grid.points();
    if (u0.first.size() != n) {
        throw std::invalid_argument("initial condition size mismatch");
    }
    const DecomposedOperator op = reaction_implicit_operator(
        grid.mx, K, grid.dt, grid.delta_x, bc1.kind);
    const std::vector<Eigen::VectorXd> oracle =
        rd_implicit_oracle(K, grid, u0, bc1, bc2);

    std::mt19937_64 rng(options.seed);
    AnsatzParams theta =
        AnsatzParams::random(grid.n_qubits() + 1, options.layers, rng);
    const SolveOptions solve_opts = to_solve_options(options);

    TimeSeries series;
    Eigen::VectorXd u(2 * n);
    u.head(n) = u0.first;
    u.tail(n) = u0.second;
    series.snapshots.push_back(u);

    for (int k = 0; k < grid.n_t; ++k) {
        const double t_next = (k + 1) * grid.dt;
        const Eigen::VectorXd b = stacked_rhs(grid, bc1, bc2, u.head(n),
                                              u.tail(n), grid.delta_x,
                                              t_next);
        if (!options.warm_start && k > 0) {
            theta = AnsatzParams::random(grid.n_qubits() + 1, options.layers,
                                         rng);
        }
        StepOutcome step = variational_linear_step(op, b, oracle[k + 1],
                                                   theta, solve_opts);
        u = std::move(step.u_next);
        series.snapshots.push_back(u);
        series.per_step.push_back(step.metrics);
    }
    return series;
}

} // namespace vqpde
