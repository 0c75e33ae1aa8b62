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
#include "vqpde/grid.hpp"

#include <stdexcept>

namespace vqpde {

namespace {

void check_time(int n_t, double dt) {
    if (n_t < 1 || dt <= 0.0) {
        throw std::invalid_argument("need n_t >= 1 and dt > 0");
    }
}

} // namespace

GridSpec GridSpec::heat_1d(int n_qubits, double delta, int n_t, double dt) {
    if (n_qubits < 1) {
        throw std::invalid_argument("need at least one qubit");
    }
    check_time(n_t, dt);
    GridSpec g;
    g.dims = 1;
    g.mx = n_qubits;
    g.dx = 1.0 / (double((Eigen::Index{1} << n_qubits)) + 1.0);
    g.dt = dt;
    g.n_t = n_t;
    g.delta_x = delta;
    g.diffusivity = delta * g.dx * g.dx / dt;
    return g;
}

GridSpec GridSpec::heat_1d_diffusive(int n_qubits, double diffusivity,
                                     int n_t, double dt) {
    GridSpec g = heat_1d(n_qubits, 0.0, n_t, dt);
    g.diffusivity = diffusivity;
    g.delta_x = diffusivity * dt / (g.dx * g.dx);
    return g;
}

GridSpec GridSpec::heat_2d(int mx, int my, double delta_x, double delta_y,
                           int n_t, double dt) {
    if (mx < 1 || my < 1) {
        throw std::invalid_argument("need mx, my >= 1");
    }
    check_time(n_t, dt);
    GridSpec g;
    g.dims = 2;
    g.mx = mx;
    g.my = my;
    g.dx = 1.0 / (double((Eigen::Index{1} << mx)) + 1.0);
    g.dy = 1.0 / (double((Eigen::Index{1} << my)) + 1.0);
    g.dt = dt;
    g.n_t = n_t;
    g.delta_x = delta_x;
    g.delta_y = delta_y;
    return g;
}

Eigen::VectorXd BoundarySpec::boundary_vector(double t,
                                              Eigen::Index size) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(size);
    if (kind == Boundary::Dirichlet) {
        v(0) = g_left ? g_left(t) : 0.0;
        v(size - 1) = g_right ? g_right(t) : 0.0;
    }
    return v;
}

BoundarySpec BoundarySpec::dirichlet(double left, double right) {
    BoundarySpec bc;
    bc.kind = Boundary::Dirichlet;
    bc.g_left = [left](double) { return left; };
    bc.g_right = [right](double) { return right; };
    return bc;
}

BoundarySpec BoundarySpec::dirichlet(std::function<double(double)> left,
                                     std::function<double(double)> right) {
    BoundarySpec bc;
    bc.kind = Boundary::Dirichlet;
    bc.g_left = std::move(left);
    bc.g_right = std::move(right);
    return bc;
}

BoundarySpec BoundarySpec::neumann() {
    BoundarySpec bc;
    bc.kind = Boundary::Neumann;
    return bc;
}

Eigen::VectorXd BoundarySpec2D::boundary_vector_x(const GridSpec &grid,
                                                  double t) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(grid.points());
    if (kind_x != Boundary::Dirichlet) {
        return v;
    }
    const Eigen::Index nx = grid.points_x();
    const Eigen::Index ny = grid.points_y();
    for (Eigen::Index j = 0; j < ny; ++j) {
        const double s = grid.y_of(j);
        if (g_x_low) {
            v(j * nx) += g_x_low(s, t);
        }
        if (g_x_high) {
            v(j * nx + nx - 1) += g_x_high(s, t);
        }
    }
    return v;
}

Eigen::VectorXd BoundarySpec2D::boundary_vector_y(const GridSpec &grid,
                                                  double t) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(grid.points());
    if (kind_y != Boundary::Dirichlet) {
        return v;
    }
    const Eigen::Index nx = grid.points_x();
    const Eigen::Index ny = grid.points_y();
    for (Eigen::Index i = 0; i < nx; ++i) {
        const double s = grid.x_of(i);
        if (g_y_low) {
            v(i) += g_y_low(s, t);
        }
        if (g_y_high) {
            v((ny - 1) * nx + i) += g_y_high(s, t);
        }
    }
    return v;
}

BoundarySpec2D BoundarySpec2D::dirichlet(double g_x_low, double g_x_high,
                                         double g_y_low, double g_y_high) {
    BoundarySpec2D bc;
    bc.g_x_low = [g_x_low](double, double) { return g_x_low; };
    bc.g_x_high = [g_x_high](double, double) { return g_x_high; };
    bc.g_y_low = [g_y_low](double, double) { return g_y_low; };
    bc.g_y_high = [g_y_high](double, double) { return g_y_high; };
    return bc;
}

} // namespace vqpde
