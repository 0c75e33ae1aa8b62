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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vqpde/evolution.hpp"

namespace vqpde {

using ComponentPair = std::pair<Eigen::VectorXd, Eigen::VectorXd>;

/// Two-component reaction-diffusion system: pointwise nonlinear source and
/// per-component diffusivities and boundary data.
struct RDSystem {
    Eigen::Vector2d diffusivity{0.0, 0.0};
    std::function<ComponentPair(const Eigen::VectorXd &,
                                const Eigen::VectorXd &)>
        source;
    BoundarySpec bc1 = BoundarySpec::dirichlet(0.0, 0.0);
    BoundarySpec bc2 = BoundarySpec::dirichlet(0.0, 0.0);
};

/// f = [k1 (1 - u1) - u1 u2^2, -(k1 + k2) u2 + u1 u2^2].
ComponentPair gray_scott_source(const Eigen::VectorXd &u1,
                                const Eigen::VectorXd &u2, double k1,
                                double k2);

/// f = [-(k1 + 1) u1 + u1^2 u2 + k2, k1 u1 - u1^2 u2].
ComponentPair brusselator_source(const Eigen::VectorXd &u1,
                                 const Eigen::VectorXd &u2, double k1,
                                 double k2);

/// Per-component diffusion parameter 2^(2n) dt D_i.
Eigen::Vector2d rd_diffusion_parameters(const RDSystem &system,
                                        const GridSpec &grid);

/// Mid-pulse profiles 1 - sin^100(pi x)/2 and sin^100(pi x)/4 on the grid.
ComponentPair gray_scott_initial(const GridSpec &grid);

/// Semi-implicit variational evolution: the nonlinear source is frozen at
/// the current step and both component systems are solved independently with
/// per-component warm-started parameters.
std::pair<TimeSeries, TimeSeries> evolve_rd(const RDSystem &system,
                                            const GridSpec &grid,
                                            const ComponentPair &u0,
                                            const EvolveOptions &options);

/// Dense LU twin of evolve_rd with the identical explicit source treatment.
struct RDOracleRun {
    std::vector<Eigen::VectorXd> u1; // n_t + 1
    std::vector<Eigen::VectorXd> u2;
};
RDOracleRun evolve_rd_oracle(const RDSystem &system, const GridSpec &grid,
                             const ComponentPair &u0);

/// Fully implicit evolution for a linear Hermitian source K: one
/// (n+1)-qubit solve per step on the stacked two-component vector
/// (component 1 in the low half). Uses grid.delta_x for both components.
TimeSeries evolve_rd_implicit_linear(const Eigen::Matrix2d &K,
                                     const GridSpec &grid,
                                     const ComponentPair &u0,
                                     const BoundarySpec &bc1,
                                     const BoundarySpec &bc2,
                                     const EvolveOptions &options);

/// Dense twin of the fully implicit path; returns stacked snapshots.
std::vector<Eigen::VectorXd> rd_implicit_oracle(const Eigen::Matrix2d &K,
                                                const GridSpec &grid,
                                                const ComponentPair &u0,
                                                const BoundarySpec &bc1,
                                                const BoundarySpec &bc2);

} // namespace vqpde
