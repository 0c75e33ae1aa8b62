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

#include "vqpde/operators.hpp"

namespace vqpde {

/// Time-stepping scheme; the explicit method exists only in the classical
/// reference path.
enum class Scheme { Explicit, IE, CN };

/// Uniform grid with 2^m unknowns per axis. Boundary nodes are eliminated
/// into the right-hand side, so a domain of length L with 2^m + 1 intervals
/// has spacing dx = L / (2^m + 1) and interior nodes at (i + 1) * dx.
struct GridSpec {
    int dims = 1;
    int mx = 0; // qubits on the x axis
    int my = 0; // qubits on the y axis (0 in 1D)
    double dx = 0.0;
    double dy = 0.0;
    double dt = 0.0;
    int n_t = 1;
    double diffusivity = 0.0; // D; informational when delta set directly
    double delta_x = 0.0;     // D dt / dx^2 unless set directly
    double delta_y = 0.0;

    int n_qubits() const { return mx + my; }
    Eigen::Index points() const { return Eigen::Index{1} << n_qubits(); }
    Eigen::Index points_x() const { return Eigen::Index{1} << mx; }
    Eigen::Index points_y() const { return Eigen::Index{1} << my; }
    /// Interior x position of index i (1D / x axis).
    double x_of(Eigen::Index i) const { return (double(i) + 1.0) * dx; }
    double y_of(Eigen::Index j) const { return (double(j) + 1.0) * dy; }

    /// 1D grid with the diffusion parameter given directly; dx defaults to
    /// the unit domain with 2^n + 1 intervals.
    static GridSpec heat_1d(int n_qubits, double delta, int n_t, double dt);
    /// 1D grid with delta derived as D dt / dx^2 on a unit domain.
    static GridSpec heat_1d_diffusive(int n_qubits, double diffusivity,
                                      int n_t, double dt);
    /// 2D grid with per-axis diffusion parameters given directly.
    static GridSpec heat_2d(int mx, int my, double delta_x, double delta_y,
                            int n_t, double dt);
};

/// Boundary data shared by both ends of a 1D axis. Dirichlet carries value
/// functions of time; Neumann is zero-flux.
struct BoundarySpec {
    Boundary kind = Boundary::Dirichlet;
    std::function<double(double)> g_left;
    std::function<double(double)> g_right;

    /// Dirichlet boundary vector (g_left(t), 0, ..., 0, g_right(t)); zero
    /// for Neumann.
    Eigen::VectorXd boundary_vector(double t, Eigen::Index size) const;

    static BoundarySpec dirichlet(double left, double right);
    static BoundarySpec dirichlet(std::function<double(double)> left,
                                  std::function<double(double)> right);
    static BoundarySpec neumann();
};

/// Per-axis boundary data on a 2D grid; face value functions take the
/// transverse position and time. Null functions mean zero.
struct BoundarySpec2D {
    Boundary kind_x = Boundary::Dirichlet;
    Boundary kind_y = Boundary::Dirichlet;
    std::function<double(double, double)> g_x_low, g_x_high;
    std::function<double(double, double)> g_y_low, g_y_high;

    /// Nonzeros at x-boundary-adjacent entries of the row-major (x fastest)
    /// flattening; zero for Neumann.
    Eigen::VectorXd boundary_vector_x(const GridSpec &grid, double t) const;
    Eigen::VectorXd boundary_vector_y(const GridSpec &grid, double t) const;

    static BoundarySpec2D dirichlet(double g_x_low, double g_x_high,
                                    double g_y_low, double g_y_high);
};

} // namespace vqpde
