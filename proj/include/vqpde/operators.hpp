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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqpde/state.hpp"

namespace vqpde {

enum class Boundary { Dirichlet, Neumann };

/// Single-qubit factor of a simple Hamiltonian: identity, Pauli X, or the
/// projectors |0><0| and |1><1|.
enum class Factor : std::uint8_t { I, X, P0, P1 };

/// Weighted tensor product of simple factors, optionally conjugated by the
/// cyclic shift on a qubit range: weight * S^dag (prod factors) S.
/// factors[q] acts on qubit q (qubit 0 = least-significant basis bit); the
/// conventional left-to-right tensor notation therefore lists factors from
/// the highest qubit down.
struct HamiltonianTerm {
    double weight = 0.0;
    std::vector<Factor> factors;
    std::optional<ShiftRange> shift;
};

/// identity_coefficient * I + sum of weighted terms. All operators built
/// here assemble to symmetric dense matrices; values are immutable after
/// construction and freely shareable.
struct DecomposedOperator {
    int n_qubits = 0;
    double identity_coefficient = 0.0;
    std::vector<HamiltonianTerm> terms;

    std::int64_t dim() const { return std::int64_t{1} << n_qubits; }
    int term_count() const { return static_cast<int>(terms.size()); }
};

/// <phi'|H|phi'> with phi' = S phi when the term carries a shift range,
/// H the (unweighted) factor product.
double expect_term(const StateVector &state, const HamiltonianTerm &term);

/// identity_coefficient + sum of weight * expect_term.
double expect_operator(const StateVector &state, const DecomposedOperator &A);

/// <a| S^dag H S |b> for the term's unweighted factor product.
Complex term_bilinear(const StateVector &a, const StateVector &b,
                      const HamiltonianTerm &term);

/// A * x evaluated term-by-term on a real vector (no dense assembly).
Eigen::VectorXd apply_operator(const DecomposedOperator &A,
                               const Eigen::VectorXd &x);

/// Tridiagonal 1D Laplacian: diagonal 2 in the interior, corner entries
/// 1 + alpha (alpha = 1 Dirichlet, 0 Neumann), off-diagonals -1.
Eigen::MatrixXd laplacian_1d_dense(int n_qubits, Boundary boundary);

/// Shift-conjugated simple-Hamiltonian decomposition of the 1D Laplacian;
/// assembles to laplacian_1d_dense exactly. Three terms for Dirichlet, four
/// for Neumann, plus the identity offset 2.
DecomposedOperator decompose_laplacian_1d(int n_qubits, Boundary boundary);

/// Axis Laplacians on an (mx + my)-qubit register, x in the low bits.
/// Dense assemblies equal I (x) A_1d and A_1d (x) I respectively.
std::pair<DecomposedOperator, DecomposedOperator>
decompose_laplacian_2d(int mx, int my, Boundary boundary_x,
                       Boundary boundary_y);

/// Central-difference divergence matrix scaled by 1/(2 dx): superdiagonal
/// +1, subdiagonal -1, corner entries alpha / -alpha from ghost-node
/// elimination (alpha = 0 Dirichlet, -1 Neumann). The Neumann variant is a
/// consistent gradient: it maps constants to zero.
Eigen::MatrixXd divergence_dense(int n_qubits, Boundary boundary, double dx);

/// Fully implicit two-component reaction operator on n+1 qubits (component
/// qubit most significant): I + delta_x (I (x) A_1d) - dt (K-block (x) I).
/// Requires symmetric K; contributes exactly three source terms beyond the
/// diffusion decomposition.
DecomposedOperator reaction_implicit_operator(int n_qubits,
                                              const Eigen::Matrix2d &K,
                                              double dt, double delta_x,
                                              Boundary boundary);

DecomposedOperator scale_operator(DecomposedOperator A, double factor);
DecomposedOperator add_identity(DecomposedOperator A, double coefficient);
/// Sum of two operators on the same register.
DecomposedOperator add_operators(const DecomposedOperator &a,
                                 const DecomposedOperator &b);

/// Dense matrix of a single (weighted, shift-conjugated) term.
Eigen::MatrixXd term_dense(const HamiltonianTerm &term, int n_qubits);
/// Dense assembly of the full operator; used by tests and diagnostics only.
Eigen::MatrixXd to_dense(const DecomposedOperator &A);

/// Coefficients c_P = tr(P A) / 2^n over the full n-qubit Pauli basis, keyed
/// by strings such as "IXZ" (leftmost character = most significant qubit).
/// Diagnostic only; requires a symmetric matrix of dimension 2^n, n <= 6.
std::map<std::string, double>
pauli_coefficients_diagnostic(const Eigen::MatrixXd &A);

} // namespace vqpde
