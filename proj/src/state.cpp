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
#include "vqpde/state.hpp"

#include <cmath>
#include <stdexcept>

namespace vqpde {

namespace {

void check_qubit(int n_qubits, int qubit, const char *what) {
    if (qubit < 0 || qubit >= n_qubits) {
        throw std::invalid_argument(std::string(what) + " qubit index " +
                                    std::to_string(qubit) +
                                    " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
    }
}

std::int64_t shifted_index(std::int64_t i, ShiftRange range, bool inverse) {
    const std::int64_t width = range.width();
    const std::int64_t field_mask = ((std::int64_t{1} << width) - 1)
                                    << range.lo;
    const std::int64_t field = (i & field_mask) >> range.lo;
    const std::int64_t step = inverse ? (std::int64_t{1} << width) - 1 : 1;
    const std::int64_t mapped =
        (field + step) & ((std::int64_t{1} << width) - 1);
    return (i & ~field_mask) | (mapped << range.lo);
}

void check_range(const StateVector &state, ShiftRange range) {
    if (range.lo < 0 || range.hi > state.n_qubits || range.lo >= range.hi) {
        throw std::invalid_argument(
            "shift range [" + std::to_string(range.lo) + ", " +
            std::to_string(range.hi) + ") invalid for " +
            std::to_string(state.n_qubits) + " qubits");
    }
}

} // namespace

StateVector StateVector::zero_state(int n_qubits) {
    return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, std::int64_t index) {
    if (n_qubits < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    const std::int64_t dim = std::int64_t{1} << n_qubits;
    if (index < 0 || index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes = Eigen::VectorXcd::Zero(dim);
    s.amplitudes(index) = 1.0;
    return s;
}

double StateVector::max_imag() const {
    double m = 0.0;
    for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
        m = std::max(m, std::abs(amplitudes(i).imag()));
    }
    return m;
}

namespace detail {

void ry_inplace(Eigen::VectorXcd &amps, int n_qubits, int qubit,
                double angle) {
    check_qubit(n_qubits, qubit, "RY");
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::int64_t bit = std::int64_t{1} << qubit;
    const std::int64_t dim = amps.size();
    for (std::int64_t i = 0; i < dim; ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = amps(i);
        const Complex a1 = amps(i | bit);
        amps(i) = c * a0 - s * a1;
        amps(i | bit) = s * a0 + c * a1;
    }
}

void cx_inplace(Eigen::VectorXcd &amps, int n_qubits, int control,
                int target) {
    check_qubit(n_qubits, control, "CX control");
    check_qubit(n_qubits, target, "CX target");
    if (control == target) {
        throw std::invalid_argument("CX control and target must differ");
    }
    const std::int64_t cbit = std::int64_t{1} << control;
    const std::int64_t tbit = std::int64_t{1} << target;
    const std::int64_t dim = amps.size();
    for (std::int64_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps(i), amps(i | tbit));
        }
    }
}

Eigen::VectorXd shift_real(const Eigen::VectorXd &x, ShiftRange range,
                           bool inverse) {
    Eigen::VectorXd out(x.size());
    for (std::int64_t i = 0; i < x.size(); ++i) {
        out(shifted_index(i, range, inverse)) = x(i);
    }
    return out;
}

} // namespace detail

StateVector apply_ry(const StateVector &state, int qubit, double angle) {
    StateVector out = state;
    detail::ry_inplace(out.amplitudes, out.n_qubits, qubit, angle);
    return out;
}

StateVector apply_cx(const StateVector &state, int control, int target) {
    StateVector out = state;
    detail::cx_inplace(out.amplitudes, out.n_qubits, control, target);
    return out;
}

StateVector apply_shift(const StateVector &state, ShiftRange range,
                        bool inverse) {
    check_range(state, range);
    StateVector out;
    out.n_qubits = state.n_qubits;
    out.amplitudes.resize(state.dim());
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        out.amplitudes(shifted_index(i, range, inverse)) =
            state.amplitudes(i);
    }
    return out;
}

EncodedState encode(const Eigen::VectorXd &vector) {
    const std::int64_t len = vector.size();
    if (len < 2 || (len & (len - 1)) != 0) {
        throw std::invalid_argument(
            "encode requires a power-of-two length of at least 2, got " +
            std::to_string(len));
    }
    const double norm = vector.norm();
    if (norm == 0.0) {
        throw DegenerateInputError("cannot encode an all-zero vector");
    }
    int n = 0;
    while ((std::int64_t{1} << n) < len) {
        ++n;
    }
    EncodedState enc;
    enc.state.n_qubits = n;
    enc.state.amplitudes = (vector / norm).cast<Complex>();
    enc.norm = norm;
    enc.phase_correction = Complex{1.0, 0.0};
    return enc;
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("inner product size mismatch");
    }
    return a.amplitudes.dot(b.amplitudes);
}

namespace {

// <s| X_anc (x) I^n |s> for a (n+1)-qubit state whose ancilla is the MSB.
double expect_x_on_ancilla(const Eigen::VectorXcd &s) {
    const std::int64_t half = s.size() / 2;
    double val = 0.0;
    for (std::int64_t i = 0; i < half; ++i) {
        val += 2.0 * std::real(std::conj(s(i)) * s(i + half));
    }
    return val;
}

} // namespace

double overlap_via_superposition(const StateVector &psi,
                                 const StateVector &b) {
    if (psi.n_qubits != b.n_qubits) {
        throw std::invalid_argument("overlap size mismatch");
    }
    const std::int64_t dim = psi.dim();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd sup_b(2 * dim);
    Eigen::VectorXcd sup_ib(2 * dim);
    sup_b.head(dim) = psi.amplitudes * inv_sqrt2;
    sup_b.tail(dim) = b.amplitudes * inv_sqrt2;
    sup_ib.head(dim) = psi.amplitudes * inv_sqrt2;
    sup_ib.tail(dim) = b.amplitudes * (Complex{0.0, 1.0} * inv_sqrt2);
    const double e_real = expect_x_on_ancilla(sup_b);
    const double e_imag = expect_x_on_ancilla(sup_ib);
    return std::abs(Complex{e_real, 0.0} - Complex{0.0, 1.0} * e_imag);
}

} // namespace vqpde
