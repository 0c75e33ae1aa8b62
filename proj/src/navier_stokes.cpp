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
#include "vqpde/navier_stokes.hpp"

#include <stdexcept>

#include <Eigen/LU>
#include <unsupported/Eigen/KroneckerProduct>

namespace vqpde {

namespace {

void check_flow(const FlowState &state) {
    const Eigen::Index n = state.grid.points();
    if (state.grid.dims != 2 || state.u.size() != n ||
        state.v.size() != n || state.p.size() != n) {
        throw std::invalid_argument("flow state size mismatch");
    }
    if (state.reynolds <= 0.0) {
        throw std::invalid_argument("Reynolds number must be positive");
    }
}

// Lid velocity enters through the viscous boundary term of the u-momentum
// right-hand side only (y-low wall moving tangentially).
Eigen::VectorXd lid_boundary_vector(const GridSpec &grid,
                                    double lid_velocity) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(grid.points());
    for (Eigen::Index i = 0; i < grid.points_x(); ++i) {
        v(i) = lid_velocity;
    }
    return v;
}

} // namespace

FlowState FlowState::rest(const GridSpec &grid, double reynolds) {
    FlowState s;
    s.grid = grid;
    s.reynolds = reynolds;
    s.u = Eigen::VectorXd::Zero(grid.points());
    s.v = Eigen::VectorXd::Zero(grid.points());
    s.p = Eigen::VectorXd::Zero(grid.points());
    check_flow(s);
    return s;
}

NSMatrices ns_matrices(const GridSpec &grid) {
    const Eigen::MatrixXd ix =
        Eigen::MatrixXd::Identity(grid.points_x(), grid.points_x());
    const Eigen::MatrixXd iy =
        Eigen::MatrixXd::Identity(grid.points_y(), grid.points_y());
    NSMatrices m;
    m.bx_dirichlet = Eigen::kroneckerProduct(
        iy, divergence_dense(grid.mx, Boundary::Dirichlet, grid.dx));
    m.by_dirichlet = Eigen::kroneckerProduct(
        divergence_dense(grid.my, Boundary::Dirichlet, grid.dy), ix);
    m.bx_neumann = Eigen::kroneckerProduct(
        iy, divergence_dense(grid.mx, Boundary::Neumann, grid.dx));
    m.by_neumann = Eigen::kroneckerProduct(
        divergence_dense(grid.my, Boundary::Neumann, grid.dy), ix);
    return m;
}

std::pair<double, double> ns_deltas(const GridSpec &grid, double reynolds) {
    return {grid.dt / (reynolds * grid.dx * grid.dx),
            grid.dt / (reynolds * grid.dy * grid.dy)};
}

PredictorSystem assemble_predictor(const FlowState &state,
                                   double lid_velocity) {
    check_flow(state);
    const GridSpec &grid = state.grid;
    const auto [delta_x, delta_y] = ns_deltas(grid, state.reynolds);

    const auto [ax, ay] = decompose_laplacian_2d(
        grid.mx, grid.my, Boundary::Dirichlet, Boundary::Dirichlet);
    PredictorSystem sys;
    sys.op = add_identity(add_operators(scale_operator(ax, delta_x),
                                        scale_operator(ay, delta_y)),
                          1.0);

    const NSMatrices m = ns_matrices(grid);
    const Eigen::VectorXd fu = state.u.asDiagonal() *
                                   (m.bx_dirichlet * state.u) +
                               state.v.asDiagonal() *
                                   (m.by_dirichlet * state.u);
    const Eigen::VectorXd fv = state.u.asDiagonal() *
                                   (m.bx_dirichlet * state.v) +
                               state.v.asDiagonal() *
                                   (m.by_dirichlet * state.v);
    sys.b_u = state.u - grid.dt * fu +
              delta_y * lid_boundary_vector(grid, lid_velocity);
    sys.b_v = state.v - grid.dt * fv;
    return sys;
}

std::pair<DecomposedOperator, Eigen::VectorXd>
assemble_corrector(const Eigen::VectorXd &u_star, const Eigen::VectorXd &v_star,
                   const GridSpec &grid) {
    if (u_star.size() != grid.points() || v_star.size() != grid.points()) {
        throw std::invalid_argument("corrector input size mismatch");
    }
    const double cx = grid.dt / (grid.dx * grid.dx);
    const double cy = grid.dt / (grid.dy * grid.dy);
    const auto [ax, ay] = decompose_laplacian_2d(
        grid.mx, grid.my, Boundary::Neumann, Boundary::Neumann);
    DecomposedOperator op = add_operators(scale_operator(ax, cx),
                                          scale_operator(ay, cy));
    // Reference-pressure term (1/2)(cx + cy) |0...0><0...0| removes the
    // constant nullspace of the Neumann Laplacians.
    HamiltonianTerm reg;
    reg.weight = 0.5 * (cx + cy);
    reg.factors.assign(grid.n_qubits(), Factor::P0);
    op.terms.push_back(std::move(reg));

    const NSMatrices m = ns_matrices(grid);
    Eigen::VectorXd b =
        -(m.bx_dirichlet * u_star + m.by_dirichlet * v_star);
    return {std::move(op), std::move(b)};
}

std::pair<Eigen::VectorXd, Eigen::VectorXd>
velocity_update(const Eigen::VectorXd &u_star, const Eigen::VectorXd &v_star,
                const Eigen::VectorXd &p_next, const GridSpec &grid) {
    if (u_star.size() != grid.points() || v_star.size() != grid.points() ||
        p_next.size() != grid.points()) {
        throw std::invalid_argument("velocity update size mismatch");
    }
    const NSMatrices m = ns_matrices(grid);
    return {u_star - grid.dt * (m.bx_neumann * p_next),
            v_star - grid.dt * (m.by_neumann * p_next)};
}

double divergence_norm(const Eigen::VectorXd &u, const Eigen::VectorXd &v,
                       const GridSpec &grid) {
    const NSMatrices m = ns_matrices(grid);
    return (m.bx_dirichlet * u + m.by_dirichlet * v).norm();
}

FlowState classical_projection_step(const FlowState &state,
                                    double lid_velocity) {
    check_flow(state);
    const GridSpec &grid = state.grid;
    const Eigen::Index n = grid.points();
    const auto [delta_x, delta_y] = ns_deltas(grid, state.reynolds);
    const NSMatrices m = ns_matrices(grid);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

    const Eigen::MatrixXd lap_x_d = Eigen::kroneckerProduct(
        Eigen::MatrixXd::Identity(grid.points_y(), grid.points_y()),
        laplacian_1d_dense(grid.mx, Boundary::Dirichlet));
    const Eigen::MatrixXd lap_y_d = Eigen::kroneckerProduct(
        laplacian_1d_dense(grid.my, Boundary::Dirichlet),
        Eigen::MatrixXd::Identity(grid.points_x(), grid.points_x()));
    const Eigen::MatrixXd a_u = eye + delta_x * lap_x_d + delta_y * lap_y_d;

    const Eigen::MatrixXd f = state.u.asDiagonal() * m.bx_dirichlet +
                              state.v.asDiagonal() * m.by_dirichlet;
    const Eigen::VectorXd b_u = (eye - grid.dt * f) * state.u +
                                delta_y *
                                    lid_boundary_vector(grid, lid_velocity);
    const Eigen::VectorXd b_v = (eye - grid.dt * f) * state.v;
    const Eigen::VectorXd u_star = lu_solve(a_u, b_u);
    const Eigen::VectorXd v_star = lu_solve(a_u, b_v);

    const double cx = grid.dt / (grid.dx * grid.dx);
    const double cy = grid.dt / (grid.dy * grid.dy);
    const Eigen::MatrixXd lap_x_n = Eigen::kroneckerProduct(
        Eigen::MatrixXd::Identity(grid.points_y(), grid.points_y()),
        laplacian_1d_dense(grid.mx, Boundary::Neumann));
    const Eigen::MatrixXd lap_y_n = Eigen::kroneckerProduct(
        laplacian_1d_dense(grid.my, Boundary::Neumann),
        Eigen::MatrixXd::Identity(grid.points_x(), grid.points_x()));
    Eigen::MatrixXd a_p = cx * lap_x_n + cy * lap_y_n;
    a_p(0, 0) += 0.5 * (cx + cy);
    const Eigen::VectorXd b_p =
        -(m.bx_dirichlet * u_star + m.by_dirichlet * v_star);
    const Eigen::VectorXd p = lu_solve(a_p, b_p);

    FlowState next = state;
    next.u = u_star - grid.dt * (m.bx_neumann * p);
    next.v = v_star - grid.dt * (m.by_neumann * p);
    next.p = p;
    return next;
}

NSRun evolve_ns(const FlowState &initial, double lid_velocity, int n_t,
                const EvolveOptions &options) {
    check_flow(initial);
    if (n_t < 1) {
        throw std::invalid_argument("need n_t >= 1");
    }
    const GridSpec &grid = initial.grid;
    const SolveOptions solve_opts = to_solve_options(options);

    std::mt19937_64 rng(options.seed);
    AnsatzParams theta_u =
        AnsatzParams::random(grid.n_qubits(), options.layers, rng);
    AnsatzParams theta_v =
        AnsatzParams::random(grid.n_qubits(), options.layers, rng);
    AnsatzParams theta_p =
        AnsatzParams::random(grid.n_qubits(), options.layers, rng);

    NSRun run;
    run.states.push_back(initial);
    FlowState state = initial;
    FlowState oracle = initial;

    auto stats_of = [](const StepMetrics &m) {
        NSSolveStats s;
        s.n_function_evals = m.n_function_evals;
        s.n_iterations = m.n_iterations;
        s.cost = m.cost;
        s.converged = m.converged;
        return s;
    };
    auto safe_trace = [](const Eigen::VectorXd &a, const Eigen::VectorXd &b) {
        if (a.norm() == 0.0 || b.norm() == 0.0) {
            return (a.norm() == 0.0 && b.norm() == 0.0) ? 0.0 : 1.0;
        }
        return trace_error(a, b);
    };

    for (int k = 0; k < n_t; ++k) {
        const FlowState oracle_next =
            classical_projection_step(oracle, lid_velocity);

        NSStepMetrics metrics;
        PredictorSystem pred = assemble_predictor(state, lid_velocity);
        if (!options.warm_start && k > 0) {
            theta_u = AnsatzParams::random(grid.n_qubits(), options.layers,
                                           rng);
            theta_v = AnsatzParams::random(grid.n_qubits(), options.layers,
                                           rng);
            theta_p = AnsatzParams::random(grid.n_qubits(), options.layers,
                                           rng);
        }
        StepOutcome su = variational_linear_step(
            pred.op, pred.b_u, Eigen::VectorXd::Zero(grid.points()), theta_u,
            solve_opts);
        StepOutcome sv = variational_linear_step(
            pred.op, pred.b_v, Eigen::VectorXd::Zero(grid.points()), theta_v,
            solve_opts);
        const Eigen::VectorXd &u_star = su.u_next;
        const Eigen::VectorXd &v_star = sv.u_next;
        metrics.divergence_pre = divergence_norm(u_star, v_star, grid);

        auto [corr_op, b_p] = assemble_corrector(u_star, v_star, grid);
        StepOutcome sp = variational_linear_step(
            corr_op, b_p, Eigen::VectorXd::Zero(grid.points()), theta_p,
            solve_opts);
        const Eigen::VectorXd &p_next = sp.u_next;

        auto [u_next, v_next] = velocity_update(u_star, v_star, p_next, grid);
        metrics.divergence_post = divergence_norm(u_next, v_next, grid);

        state.u = std::move(u_next);
        state.v = std::move(v_next);
        state.p = p_next;

        metrics.u = stats_of(su.metrics);
        metrics.v = stats_of(sv.metrics);
        metrics.p = stats_of(sp.metrics);
        metrics.u.trace_error_vs_oracle = safe_trace(state.u, oracle_next.u);
        metrics.v.trace_error_vs_oracle = safe_trace(state.v, oracle_next.v);
        const Eigen::VectorXd p_centered =
            state.p.array() - state.p.mean();
        const Eigen::VectorXd p_oracle_centered =
            oracle_next.p.array() - oracle_next.p.mean();
        metrics.p.trace_error_vs_oracle =
            safe_trace(p_centered, p_oracle_centered);

        oracle = oracle_next;
        run.states.push_back(state);
        run.per_step.push_back(metrics);
    }
    return run;
}

} // namespace vqpde
