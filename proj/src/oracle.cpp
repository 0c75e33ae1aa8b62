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
#include "vqpde/oracle.hpp"

#include <stdexcept>

#include <Eigen/LU>
#include <unsupported/Eigen/KroneckerProduct>

namespace vqpde {

Eigen::VectorXd lu_solve(const Eigen::MatrixXd &A, const Eigen::VectorXd &b) {
    if (A.rows() != A.cols() || A.rows() != b.size()) {
        throw std::invalid_argument("lu_solve shape mismatch");
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (!lu.isInvertible()) {
        throw FactorizationError("matrix is singular");
    }
    return lu.solve(b);
}

OracleRun classical_evolve(Scheme scheme, const GridSpec &grid,
                           const BoundarySpec &bc, const Eigen::VectorXd &u0,
                           const SourceFn &source) {
    const Eigen::Index n = grid.points();
    if (u0.size() != n) {
        throw std::invalid_argument("initial condition size mismatch");
    }
    const double delta = grid.delta_x;
    if (scheme == Scheme::Explicit && delta > 0.5 + 1e-12) {
        throw StabilityError("explicit scheme requires delta <= 1/2");
    }
    const Eigen::MatrixXd a1 = laplacian_1d_dense(grid.mx, bc.kind);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

    OracleRun run;
    run.scheme = scheme;
    run.snapshots.reserve(grid.n_t + 1);
    run.snapshots.push_back(u0);

    switch (scheme) {
    case Scheme::Explicit:
        run.lhs = eye;
        break;
    case Scheme::IE:
        run.lhs = eye + delta * a1;
        break;
    case Scheme::CN:
        run.lhs = 2.0 * eye + delta * a1;
        break;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(run.lhs);

    Eigen::VectorXd u = u0;
    for (int k = 0; k < grid.n_t; ++k) {
        const double t_k = k * grid.dt;
        const double t_next = (k + 1) * grid.dt;
        Eigen::VectorXd rhs;
        switch (scheme) {
        case Scheme::Explicit:
            u = (eye - delta * a1) * u + delta * bc.boundary_vector(t_k, n);
            if (source) {
                u += grid.dt * source(t_k);
            }
            break;
        case Scheme::IE:
            rhs = u + delta * bc.boundary_vector(t_next, n);
            if (source) {
                rhs += grid.dt * source(t_next);
            }
            u = lu.solve(rhs);
            break;
        case Scheme::CN:
            rhs = (2.0 * eye - delta * a1) * u +
                  delta * (bc.boundary_vector(t_k, n) +
                           bc.boundary_vector(t_next, n));
            if (source) {
                rhs += grid.dt * (source(t_k) + source(t_next));
            }
            u = lu.solve(rhs);
            break;
        }
        run.snapshots.push_back(u);
    }
    return run;
}

OracleRun classical_evolve_2d(const GridSpec &grid, const BoundarySpec2D &bc,
                              const Eigen::VectorXd &u0) {
    const Eigen::Index n = grid.points();
    if (grid.dims != 2 || u0.size() != n) {
        throw std::invalid_argument("2D oracle input mismatch");
    }
    const Eigen::MatrixXd ax = Eigen::kroneckerProduct(
        Eigen::MatrixXd::Identity(grid.points_y(), grid.points_y()),
        laplacian_1d_dense(grid.mx, bc.kind_x));
    const Eigen::MatrixXd ay = Eigen::kroneckerProduct(
        laplacian_1d_dense(grid.my, bc.kind_y),
        Eigen::MatrixXd::Identity(grid.points_x(), grid.points_x()));

    OracleRun run;
    run.scheme = Scheme::IE;
    run.lhs = Eigen::MatrixXd::Identity(n, n) + grid.delta_x * ax +
              grid.delta_y * ay;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(run.lhs);

    Eigen::VectorXd u = u0;
    run.snapshots.push_back(u0);
    for (int k = 0; k < grid.n_t; ++k) {
        const double t_next = (k + 1) * grid.dt;
        const Eigen::VectorXd rhs =
            u + grid.delta_x * bc.boundary_vector_x(grid, t_next) +
            grid.delta_y * bc.boundary_vector_y(grid, t_next);
        u = lu.solve(rhs);
        run.snapshots.push_back(u);
    }
    return run;
}

} // namespace vqpde
