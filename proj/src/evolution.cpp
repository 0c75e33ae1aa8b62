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
#include "vqpde/evolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vqpde {

double TimeSeries::mean_trace_error() const {
    if (per_step.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto &m : per_step) {
        sum += m.trace_error_vs_oracle;
    }
    return sum / double(per_step.size());
}

double TimeSeries::mean_function_evals() const {
    if (per_step.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto &m : per_step) {
        sum += double(m.n_function_evals);
    }
    return sum / double(per_step.size());
}

double TimeSeries::mean_iterations() const {
    if (per_step.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto &m : per_step) {
        sum += double(m.n_iterations);
    }
    return sum / double(per_step.size());
}

bool TimeSeries::all_converged() const {
    for (const auto &m : per_step) {
        if (!m.converged) {
            return false;
        }
    }
    return true;
}

std::pair<DecomposedOperator, Eigen::VectorXd>
assemble_ie(const GridSpec &grid, const BoundarySpec &bc,
            const Eigen::VectorXd &u_k, double t_next) {
    const Eigen::Index n = grid.points();
    if (u_k.size() != n) {
        throw std::invalid_argument("assemble_ie state size mismatch");
    }
    DecomposedOperator op = add_identity(
        scale_operator(decompose_laplacian_1d(grid.mx, bc.kind),
                       grid.delta_x),
        1.0);
    Eigen::VectorXd b = u_k + grid.delta_x * bc.boundary_vector(t_next, n);
    return {std::move(op), std::move(b)};
}

std::pair<DecomposedOperator, Eigen::VectorXd>
assemble_cn(const GridSpec &grid, const BoundarySpec &bc,
            const Eigen::VectorXd &u_k, const Eigen::VectorXd &b_prev,
            double t_k, double t_next) {
    const Eigen::Index n = grid.points();
    if (u_k.size() != n) {
        throw std::invalid_argument("assemble_cn state size mismatch");
    }
    if (b_prev.size() != n) {
        throw StateError("assemble_cn requires the previous right-hand side");
    }
    DecomposedOperator op = add_identity(
        scale_operator(decompose_laplacian_1d(grid.mx, bc.kind),
                       grid.delta_x),
        2.0);
    Eigen::VectorXd b = 4.0 * u_k - b_prev +
                        grid.delta_x * (bc.boundary_vector(t_next, n) +
                                        bc.boundary_vector(t_k, n));
    return {std::move(op), std::move(b)};
}

Eigen::VectorXd cn_bootstrap_rhs(const GridSpec &grid, const BoundarySpec &bc,
                                 const Eigen::VectorXd &u0, double t0,
                                 double t1) {
    const Eigen::Index n = grid.points();
    if (u0.size() != n) {
        throw std::invalid_argument("cn_bootstrap size mismatch");
    }
    const Eigen::MatrixXd a1 = laplacian_1d_dense(grid.mx, bc.kind);
    return 2.0 * u0 - grid.delta_x * (a1 * u0) +
           grid.delta_x *
               (bc.boundary_vector(t0, n) + bc.boundary_vector(t1, n));
}

double trace_error(const StateVector &psi, const Eigen::VectorXd &u_ref) {
    const double ref_norm = u_ref.norm();
    if (ref_norm == 0.0) {
        throw DegenerateInputError("trace error against a zero reference");
    }
    if (psi.dim() != u_ref.size()) {
        throw std::invalid_argument("trace error size mismatch");
    }
    const Complex ov = psi.amplitudes.dot((u_ref / ref_norm).cast<Complex>());
    const double p2 = std::norm(ov);
    return std::sqrt(std::max(0.0, 1.0 - p2));
}

double trace_error(const Eigen::VectorXd &u, const Eigen::VectorXd &u_ref) {
    const double n_u = u.norm();
    if (n_u == 0.0) {
        throw DegenerateInputError("trace error of a zero vector");
    }
    StateVector psi;
    psi.n_qubits = 0;
    while ((Eigen::Index{1} << psi.n_qubits) < u.size()) {
        ++psi.n_qubits;
    }
    psi.amplitudes = (u / n_u).cast<Complex>();
    return trace_error(psi, u_ref);
}

double exact_heat(double x, double t, double diffusivity, double length_x) {
    const double k = std::numbers::pi / length_x;
    return std::sin(k * x) * std::exp(-diffusivity * t * k * k);
}

StepOutcome variational_linear_step(const DecomposedOperator &op,
                                    const Eigen::VectorXd &b,
                                    const Eigen::VectorXd &u_ref_next,
                                    AnsatzParams &theta,
                                    const SolveOptions &solve_options) {
    StepOutcome out;
    const double b_norm = b.norm();
    if (b_norm == 0.0) {
        out.u_next = Eigen::VectorXd::Zero(b.size());
        out.metrics.trace_error_vs_oracle =
            u_ref_next.norm() == 0.0 ? 0.0 : 1.0;
        return out;
    }
    const EncodedState enc = encode(b);
    const SolveResult res = vqls_solve(op, enc.state, theta, solve_options);
    theta = res.theta_opt;
    out.u_next = enc.norm * res.solution;
    out.metrics.n_function_evals = res.n_function_evals;
    out.metrics.n_iterations = res.n_iterations;
    out.metrics.cost = res.cost;
    out.metrics.converged = res.converged;
    if (u_ref_next.norm() > 0.0) {
        out.metrics.trace_error_vs_oracle =
            out.u_next.norm() > 0.0 ? trace_error(out.u_next, u_ref_next)
                                    : 1.0;
    }
    return out;
}

SolveOptions to_solve_options(const EvolveOptions &options) {
    SolveOptions s;
    s.tol = options.tol;
    s.max_evals = options.max_evals;
    return s;
}

TimeSeries evolve(const GridSpec &grid, const BoundarySpec &bc,
                  const Eigen::VectorXd &u0, Scheme scheme,
                  const EvolveOptions &options) {
    if (scheme == Scheme::Explicit) {
        throw std::invalid_argument(
            "explicit stepping needs no linear solve; use the classical path");
    }
    const Eigen::Index n = grid.points();
    if (u0.size() != n) {
        throw std::invalid_argument("initial condition size mismatch");
    }

    const OracleRun oracle = classical_evolve(scheme, grid, bc, u0);
    std::mt19937_64 rng(options.seed);
    AnsatzParams theta =
        AnsatzParams::random(grid.n_qubits(), options.layers, rng);
    const SolveOptions solve_opts = to_solve_options(options);

    TimeSeries series;
    series.scheme = scheme;
    series.snapshots.push_back(u0);

    Eigen::VectorXd u = u0;
    Eigen::VectorXd b_prev;
    if (scheme == Scheme::CN) {
        b_prev = cn_bootstrap_rhs(grid, bc, u0, 0.0, grid.dt);
    }

    for (int k = 0; k < grid.n_t; ++k) {
        const double t_k = k * grid.dt;
        const double t_next = (k + 1) * grid.dt;
        std::pair<DecomposedOperator, Eigen::VectorXd> system;
        if (scheme == Scheme::IE) {
            system = assemble_ie(grid, bc, u, t_next);
        } else if (k == 0) {
            system.first = add_identity(
                scale_operator(decompose_laplacian_1d(grid.mx, bc.kind),
                               grid.delta_x),
                2.0);
            system.second = b_prev;
        } else {
            system = assemble_cn(grid, bc, u, b_prev, t_k, t_next);
        }
        if (scheme == Scheme::CN) {
            b_prev = system.second;
        }
        if (!options.warm_start && k > 0) {
            theta = AnsatzParams::random(grid.n_qubits(), options.layers, rng);
        }
        StepOutcome step = variational_linear_step(system.first, system.second,
                                        oracle.snapshots[k + 1], theta,
                                        solve_opts);
        u = std::move(step.u_next);
        series.snapshots.push_back(u);
        series.per_step.push_back(step.metrics);
    }
    return series;
}

TimeSeries evolve_2d(const GridSpec &grid, const BoundarySpec2D &bc,
                     const Eigen::VectorXd &u0,
                     const EvolveOptions &options) {
    const Eigen::Index n = grid.points();
    if (grid.dims != 2 || u0.size() != n) {
        throw std::invalid_argument("2D evolve input mismatch");
    }

    const OracleRun oracle = classical_evolve_2d(grid, bc, u0);
    const auto [ax, ay] =
        decompose_laplacian_2d(grid.mx, grid.my, bc.kind_x, bc.kind_y);
    const DecomposedOperator op = add_identity(
        add_operators(scale_operator(ax, grid.delta_x),
                      scale_operator(ay, grid.delta_y)),
        1.0);

    std::mt19937_64 rng(options.seed);
    AnsatzParams theta =
        AnsatzParams::random(grid.n_qubits(), options.layers, rng);
    const SolveOptions solve_opts = to_solve_options(options);

    TimeSeries series;
    series.scheme = Scheme::IE;
    series.snapshots.push_back(u0);
    Eigen::VectorXd u = u0;

    for (int k = 0; k < grid.n_t; ++k) {
        const double t_next = (k + 1) * grid.dt;
        const Eigen::VectorXd b =
            u + grid.delta_x * bc.boundary_vector_x(grid, t_next) +
            grid.delta_y * bc.boundary_vector_y(grid, t_next);
        if (!options.warm_start && k > 0) {
            theta = AnsatzParams::random(grid.n_qubits(), options.layers, rng);
        }
        StepOutcome step = variational_linear_step(op, b, oracle.snapshots[k + 1], theta,
                                        solve_opts);
        u = std::move(step.u_next);
        series.snapshots.push_back(u);
        series.per_step.push_back(step.metrics);
    }
    return series;
}

} // namespace vqpde
