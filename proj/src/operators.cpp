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
#include "vqpde/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace vqpde {

namespace {

struct FactorMasks {
    std::int64_t x_mask = 0;
    std::int64_t p0_mask = 0;
    std::int64_t p1_mask = 0;
};

FactorMasks factor_masks(const std::vector<Factor> &factors) {
    FactorMasks m;
    for (std::size_t q = 0; q < factors.size(); ++q) {
        const std::int64_t bit = std::int64_t{1} << q;
        switch (factors[q]) {
        case Factor::I:
            break;
        case Factor::X:
            m.x_mask |= bit;
            break;
        case Factor::P0:
            m.p0_mask |= bit;
            break;
        case Factor::P1:
            m.p1_mask |= bit;
            break;
        }
    }
    return m;
}

void check_term(const HamiltonianTerm &term, int n_qubits) {
    if (static_cast<int>(term.factors.size()) != n_qubits) {
        throw std::invalid_argument(
            "term factor list length " + std::to_string(term.factors.size()) +
            " does not match qubit count " + std::to_string(n_qubits));
    }
    if (term.shift) {
        if (term.shift->lo < 0 || term.shift->hi > n_qubits ||
            term.shift->lo >= term.shift->hi) {
            throw std::invalid_argument("term shift range invalid");
        }
    }
}

template <typename Vec> Vec apply_factors(const FactorMasks &m, const Vec &x) {
    Vec out = Vec::Zero(x.size());
    for (std::int64_t i = 0; i < x.size(); ++i) {
        if ((i & m.p0_mask) == 0 && (i & m.p1_mask) == m.p1_mask) {
            out(i ^ m.x_mask) += x(i);
        }
    }
    return out;
}

Eigen::VectorXcd shift_complex(const Eigen::VectorXcd &x, ShiftRange range,
                               bool inverse) {
    Eigen::VectorXcd out(x.size());
    const std::int64_t width = range.width();
    const std::int64_t field_mask = ((std::int64_t{1} << width) - 1)
                                    << range.lo;
    const std::int64_t modulus = std::int64_t{1} << width;
    const std::int64_t step = inverse ? modulus - 1 : 1;
    for (std::int64_t i = 0; i < x.size(); ++i) {
        const std::int64_t field = (i & field_mask) >> range.lo;
        const std::int64_t mapped = (field + step) & (modulus - 1);
        out((i & ~field_mask) | (mapped << range.lo)) = x(i);
    }
    return out;
}

std::vector<Factor> uniform_factors(int n_qubits) {
    return std::vector<Factor>(static_cast<std::size_t>(n_qubits), Factor::I);
}

Eigen::Matrix2d factor_matrix(Factor f) {
    Eigen::Matrix2d m;
    switch (f) {
    case Factor::I:
        m << 1, 0, 0, 1;
        break;
    case Factor::X:
        m << 0, 1, 1, 0;
        break;
    case Factor::P0:
        m << 1, 0, 0, 0;
        break;
    case Factor::P1:
        m << 0, 0, 0, 1;
        break;
    }
    return m;
}

} // namespace

double expect_term(const StateVector &state, const HamiltonianTerm &term) {
    check_term(term, state.n_qubits);
    const Eigen::VectorXcd phi =
        term.shift ? shift_complex(state.amplitudes, *term.shift, false)
                   : state.amplitudes;
    const FactorMasks m = factor_masks(term.factors);
    const Eigen::VectorXcd h_phi = apply_factors<Eigen::VectorXcd>(m, phi);
    return std::real(phi.dot(h_phi));
}

double expect_operator(const StateVector &state, const DecomposedOperator &A) {
    if (state.n_qubits != A.n_qubits) {
        throw std::invalid_argument("operator/state qubit count mismatch");
    }
    double val = A.identity_coefficient;
    for (const auto &term : A.terms) {
        val += term.weight * expect_term(state, term);
    }
    return val;
}

Complex term_bilinear(const StateVector &a, const StateVector &b,
                      const HamiltonianTerm &term) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("bilinear size mismatch");
    }
    check_term(term, a.n_qubits);
    const Eigen::VectorXcd ap =
        term.shift ? shift_complex(a.amplitudes, *term.shift, false)
                   : a.amplitudes;
    const Eigen::VectorXcd bp =
        term.shift ? shift_complex(b.amplitudes, *term.shift, false)
                   : b.amplitudes;
    const FactorMasks m = factor_masks(term.factors);
    return ap.dot(apply_factors<Eigen::VectorXcd>(m, bp));
}

Eigen::VectorXd apply_operator(const DecomposedOperator &A,
                               const Eigen::VectorXd &x) {
    if (x.size() != A.dim()) {
        throw std::invalid_argument("apply_operator size mismatch");
    }
    Eigen::VectorXd out = A.identity_coefficient * x;
    for (const auto &term : A.terms) {
        check_term(term, A.n_qubits);
        Eigen::VectorXd y =
            term.shift ? detail::shift_real(x, *term.shift, false) : x;
        y = apply_factors<Eigen::VectorXd>(factor_masks(term.factors), y);
        if (term.shift) {
            y = detail::shift_real(y, *term.shift, true);
        }
        out += term.weight * y;
    }
    return out;
}

Eigen::MatrixXd laplacian_1d_dense(int n_qubits, Boundary boundary) {
    if (n_qubits < 1) {
        throw std::invalid_argument("laplacian needs at least one qubit");
    }
    const std::int64_t n = std::int64_t{1} << n_qubits;
    const double alpha = boundary == Boundary::Dirichlet ? 1.0 : 0.0;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::int64_t i = 0; i < n; ++i) {
        m(i, i) = 2.0;
        if (i + 1 < n) {
            m(i, i + 1) = -1.0;
            m(i + 1, i) = -1.0;
        }
    }
    m(0, 0) = 1.0 + alpha;
    m(n - 1, n - 1) = 1.0 + alpha;
    return m;
}

namespace {

// Shared 1D decomposition body embedded into an n_total-qubit register with
// the axis occupying qubits [offset, offset + m). The H3/H4 projector block
// covers the axis bits above the X factor; bits outside the axis are
// identity.
DecomposedOperator embedded_laplacian(int n_total, int offset, int m,
                                      Boundary boundary) {
    DecomposedOperator op;
    op.n_qubits = n_total;
    op.identity_coefficient = 2.0;
    const ShiftRange range{offset, offset + m};

    HamiltonianTerm h1;
    h1.weight = -1.0;
    h1.factors = uniform_factors(n_total);
    h1.factors[offset] = Factor::X;
    op.terms.push_back(h1);

    HamiltonianTerm h2 = h1;
    h2.shift = range;
    op.terms.push_back(h2);

    HamiltonianTerm h3;
    h3.weight = 1.0;
    h3.factors = uniform_factors(n_total);
    h3.factors[offset] = Factor::X;
    for (int q = offset + 1; q < offset + m; ++q) {
        h3.factors[q] = Factor::P0;
    }
    h3.shift = range;
    op.terms.push_back(h3);

    if (boundary == Boundary::Neumann) {
        HamiltonianTerm h4;
        h4.weight = -1.0; // b_N = 1
        h4.factors = uniform_factors(n_total);
        for (int q = offset + 1; q < offset + m; ++q) {
            h4.factors[q] = Factor::P0;
        }
        h4.shift = range;
        op.terms.push_back(h4);
    }
    return op;
}

} // namespace

DecomposedOperator decompose_laplacian_1d(int n_qubits, Boundary boundary) {
    if (n_qubits < 1) {
        throw std::invalid_argument("laplacian needs at least one qubit");
    }
    return embedded_laplacian(n_qubits, 0, n_qubits, boundary);
}

std::pair<DecomposedOperator, DecomposedOperator>
decompose_laplacian_2d(int mx, int my, Boundary boundary_x,
                       Boundary boundary_y) {
    if (mx < 1 || my < 1) {
        throw std::invalid_argument("2D laplacian needs mx, my >= 1");
    }
    const int n = mx + my;
    return {embedded_laplacian(n, 0, mx, boundary_x),
            embedded_laplacian(n, mx, my, boundary_y)};
}

Eigen::MatrixXd divergence_dense(int n_qubits, Boundary boundary, double dx) {
    if (n_qubits < 1) {
        throw std::invalid_argument("divergence needs at least one qubit");
    }
    if (dx <= 0.0) {
        throw std::invalid_argument("grid spacing must be positive");
    }
    const std::int64_t n = std::int64_t{1} << n_qubits;
    const double alpha = boundary == Boundary::Dirichlet ? 0.0 : -1.0;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::int64_t i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = 1.0;
        m(i + 1, i) = -1.0;
    }
    // Corner entries from ghost-node elimination: alpha at the low end and
    // -alpha at the high end, so the Neumann variant annihilates constants
    // (for Dirichlet alpha = 0 and the ends coincide).
    m(0, 0) = alpha;
    m(n - 1, n - 1) = -alpha;
    return m / (2.0 * dx);
}

DecomposedOperator reaction_implicit_operator(int n_qubits,
                                              const Eigen::Matrix2d &K,
                                              double dt, double delta_x,
                                              Boundary boundary) {
    if (std::abs(K(0, 1) - K(1, 0)) >
        1e-12 * std::max(1.0, K.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument(
            "reaction matrix must be symmetric (k12 == k21)");
    }
    const int n_total = n_qubits + 1;
    // delta_x * (I (x) A_1d) on the low n qubits; component qubit on top.
    DecomposedOperator op =
        scale_operator(embedded_laplacian(n_total, 0, n_qubits, boundary),
                       delta_x);
    op.identity_coefficient += 1.0;

    const int comp = n_qubits;
    HamiltonianTerm t11;
    t11.weight = -dt * K(0, 0);
    t11.factors = uniform_factors(n_total);
    t11.factors[comp] = Factor::P0;
    op.terms.push_back(t11);

    HamiltonianTerm t22;
    t22.weight = -dt * K(1, 1);
    t22.factors = uniform_factors(n_total);
    t22.factors[comp] = Factor::P1;
    op.terms.push_back(t22);

    HamiltonianTerm t12;
    t12.weight = -dt * K(0, 1);
    t12.factors = uniform_factors(n_total);
    t12.factors[comp] = Factor::X;
    op.terms.push_back(t12);
    return op;
}

DecomposedOperator scale_operator(DecomposedOperator A, double factor) {
    A.identity_coefficient *= factor;
    if (factor == 0.0) {
        A.terms.clear();
        return A;
    }
    for (auto &term : A.terms) {
        term.weight *= factor;
    }
    return A;
}

DecomposedOperator add_identity(DecomposedOperator A, double coefficient) {
    A.identity_coefficient += coefficient;
    return A;
}

DecomposedOperator add_operators(const DecomposedOperator &a,
                                 const DecomposedOperator &b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("operator sum register mismatch");
    }
    DecomposedOperator out = a;
    out.identity_coefficient += b.identity_coefficient;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

Eigen::MatrixXd term_dense(const HamiltonianTerm &term, int n_qubits) {
    check_term(term, n_qubits);
    const std::int64_t dim = std::int64_t{1} << n_qubits;
    // Builds factors[n-1] (x) ... (x) factors[0]; qubit q lives on bit q.
    Eigen::MatrixXd h = Eigen::MatrixXd::Ones(1, 1);
    for (int q = 0; q < n_qubits; ++q) {
        const Eigen::Matrix2d f = factor_matrix(term.factors[q]);
        Eigen::MatrixXd next(h.rows() * 2, h.cols() * 2);
        next.topLeftCorner(h.rows(), h.cols()) = f(0, 0) * h;
        next.topRightCorner(h.rows(), h.cols()) = f(0, 1) * h;
        next.bottomLeftCorner(h.rows(), h.cols()) = f(1, 0) * h;
        next.bottomRightCorner(h.rows(), h.cols()) = f(1, 1) * h;
        h = next;
    }
    if (term.shift) {
        // S maps |i> to |i + 1 mod 2^w> on the range; columns of S are the
        // shifted basis states.
        Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim);
        for (std::int64_t i = 0; i < dim; ++i) {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
            e(i) = 1.0;
            s.col(i) = detail::shift_real(e, *term.shift, false);
        }
        h = s.transpose() * h * s;
    }
    return term.weight * h;
}

Eigen::MatrixXd to_dense(const DecomposedOperator &A) {
    const std::int64_t dim = A.dim();
    Eigen::MatrixXd m =
        A.identity_coefficient * Eigen::MatrixXd::Identity(dim, dim);
    for (const auto &term : A.terms) {
        m += term_dense(term, A.n_qubits);
    }
    return m;
}

std::map<std::string, double>
pauli_coefficients_diagnostic(const Eigen::MatrixXd &A) {
    const std::int64_t dim = A.rows();
    if (A.cols() != dim || dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument(
            "pauli diagnostic requires a square power-of-two matrix");
    }
    int n = 0;
    while ((std::int64_t{1} << n) < dim) {
        ++n;
    }
    if (n > 6) {
        throw std::invalid_argument("pauli diagnostic limited to n <= 6");
    }
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("pauli diagnostic requires symmetry");
    }

    static const char names[4] = {'I', 'X', 'Y', 'Z'};
    std::map<std::string, double> coeffs;
    const std::int64_t n_strings = std::int64_t{1} << (2 * n);
    for (std::int64_t code = 0; code < n_strings; ++code) {
        // Base-4 digits, one per qubit; digit q describes qubit q.
        std::string label(static_cast<std::size_t>(n), 'I');
        std::int64_t x_mask = 0;
        std::int64_t y_mask = 0;
        std::int64_t z_mask = 0;
        for (int q = 0; q < n; ++q) {
            const int digit = static_cast<int>((code >> (2 * q)) & 3);
            label[static_cast<std::size_t>(n - 1 - q)] = names[digit];
            const std::int64_t bit = std::int64_t{1} << q;
            if (digit == 1) {
                x_mask |= bit;
            } else if (digit == 2) {
                y_mask |= bit;
            } else if (digit == 3) {
                z_mask |= bit;
            }
        }
        const std::int64_t flip = x_mask | y_mask;
        Complex trace{0.0, 0.0};
        for (std::int64_t i = 0; i < dim; ++i) {
            // <i|P|i ^ flip>: each Y gives +i when the row bit is 1, -i when
            // 0; each Z gives -1 when the row bit is 1.
            Complex phase{1.0, 0.0};
            for (std::int64_t bits = y_mask; bits != 0; bits &= bits - 1) {
                const std::int64_t bit = bits & -bits;
                phase *= (i & bit) ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
            }
            int z_sign = 0;
            for (std::int64_t bits = z_mask & i; bits != 0; bits &= bits - 1) {
                ++z_sign;
            }
            if (z_sign & 1) {
                phase = -phase;
            }
            trace += phase * A(i ^ flip, i);
        }
        coeffs[label] = std::real(trace) / static_cast<double>(dim);
    }
    return coeffs;
}

} // namespace vqpde
