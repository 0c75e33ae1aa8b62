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
#include <vector>

#include <Eigen/Dense>

#include "vqpde/grid.hpp"

namespace vqpde {

/// Classical ground-truth time series; matrices are assembled from the
/// tridiagonal stencils directly, independent of the shift-conjugated
/// decompositions.
struct OracleRun {
    Scheme scheme = Scheme::IE;
    std::vector<Eigen::VectorXd> snapshots; // n_t + 1 entries
    Eigen::MatrixXd lhs; // assembled left-hand side (identity for explicit)
};

/// Dense solve with full pivoting; throws FactorizationError on a singular
/// matrix. Residual is well under 1e-10 at the problem sizes used here.
Eigen::VectorXd lu_solve(const Eigen::MatrixXd &A, const Eigen::VectorXd &b);

/// Position-space source vector at a given time (optional).
using SourceFn = std::function<Eigen::VectorXd(double t)>;

/// Dense 1D time-marching for explicit / implicit Euler / Crank-Nicolson.
/// The explicit scheme enforces the stability bound delta <= 1/2.
OracleRun classical_evolve(Scheme scheme, const GridSpec &grid,
                           const BoundarySpec &bc, const Eigen::VectorXd &u0,
                           const SourceFn &source = nullptr);

/// Dense 2D implicit-Euler twin of the quantum evolution.
OracleRun classical_evolve_2d(const GridSpec &grid, const BoundarySpec2D &bc,
                              const Eigen::VectorXd &u0);

} // namespace vqpde
