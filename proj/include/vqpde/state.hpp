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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "vqpde/errors.hpp"

namespace vqpde {

using Complex = std::complex<double>;

/// Exact n-qubit statevector. Qubit 0 is the least-significant bit of the
/// basis index; values are immutable once returned by an operation.
struct StateVector {
    int n_qubits = 0;
    Eigen::VectorXcd amplitudes;

    /// |0...0> on n qubits.
    static StateVector zero_state(int n_qubits);
    /// Computational basis state |index> on n qubits.
    static StateVector basis_state(int n_qubits, std::int64_t index);

    std::int64_t dim() const { return amplitudes.size(); }
    double norm() const { return amplitudes.norm(); }
    /// Largest |Im| over all amplitudes; ~0 for RY/CX circuits on real input.
    double max_imag() const;
    /// Real parts of the amplitudes (valid for real-amplitude states).
    Eigen::VectorXd real_amplitudes() const { return amplitudes.real(); }
};

/// Amplitude-encoded real vector: norm * state reproduces the input.
struct EncodedState {
    StateVector state;
    double norm = 0.0;
    Complex phase_correction{1.0, 0.0};
};

/// Half-open qubit range [lo, hi) for partial shift operators.
struct ShiftRange {
    int lo = 0;
    int hi = 0;
    int width() const { return hi - lo; }
};

StateVector apply_ry(const StateVector &state, int qubit, double angle);
StateVector apply_cx(const StateVector &state, int control, int target);

/// Cyclic shift on the bit-field [range.lo, range.hi): basis index i has the
/// field value mapped to (value + 1) mod 2^width (inverse: value - 1), other
/// bits untouched. A pure amplitude permutation.
StateVector apply_shift(const StateVector &state, ShiftRange range,
                        bool inverse = false);

/// Amplitude-encode a real vector of power-of-two length. Signs are
/// preserved; for real input the phase correction is the identity.
EncodedState encode(const Eigen::VectorXd &vector);

/// Conjugate-linear inner product <a|b>.
Complex inner(const StateVector &a, const StateVector &b);

/// |<psi|b>| evaluated through the (n+1)-qubit superposition states
/// (|0>|psi> + |1>|b>)/sqrt(2) and (|0>|psi> + i|1>|b>)/sqrt(2) and the
/// X (x) I^n expectation on the ancilla.
double overlap_via_superposition(const StateVector &psi, const StateVector &b);

namespace detail {
// In-place gate kernels for hot loops; public operations wrap these.
void ry_inplace(Eigen::VectorXcd &amps, int n_qubits, int qubit, double angle);
void cx_inplace(Eigen::VectorXcd &amps, int n_qubits, int control, int target);
// Shift permutation on a real vector (used by classical term application).
Eigen::VectorXd shift_real(const Eigen::VectorXd &x, ShiftRange range,
                           bool inverse);
} // namespace detail

} // namespace vqpde
