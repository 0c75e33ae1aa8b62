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
#include "vqpde/vqls.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vqpde/lbfgs.hpp"

namespace vqpde {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const AnsatzParams &p) {
    if (p.n_qubits < 1 || p.layers < 1) {
        throw std::invalid_argument("ansatz needs qubits >= 1, layers >= 1");
    }
    if (p.theta.rows() != p.layers || p.theta.cols() != p.n_qubits) {
        throw std::invalid_argument("theta shape mismatch");
    }
    if (!p.theta.allFinite()) {
        throw std::invalid_argument("ansatz angles must be finite");
    }
}

void check_problem(const AnsatzParams &p, const DecomposedOperator &A,
                   const StateVector &b) {
    check_params(p);
    if (A.n_qubits != p.n_qubits || b.n_qubits != p.n_qubits) {
        throw std::invalid_argument("ansatz/operator/source size mismatch");
    }
}

struct CostParts {
    Eigen::VectorXd psi; // real amplitudes of psi(theta)
    Eigen::VectorXd a_psi;
    double overlap = 0.0;     // <psi|b>, signed
    double denominator = 0.0; // <psi|A|psi>
};

CostParts evaluate_parts(const AnsatzParams &params,
                         const DecomposedOperator &A, const StateVector &b) {
    CostParts parts;
    const StateVector psi = prepare_ansatz(params);
    parts.psi = psi.real_amplitudes();
    parts.a_psi = apply_operator(A, parts.psi);
    parts.overlap = parts.psi.dot(b.real_amplitudes());
    parts.denominator = parts.psi.dot(parts.a_psi);
    if (parts.denominator <= 0.0) {
        throw SingularCostError("<psi|A|psi> is not positive; cost undefined");
    }
    return parts;
}

// Circuit accounting: one circuit per Hamiltonian term plus two overlap
// circuits per cost evaluation.
long circuits_per_cost(const DecomposedOperator &A) {
    return static_cast<long>(A.terms.size()) + 2;
}

} // namespace

AnsatzParams AnsatzParams::zero(int n_qubits, int layers) {
    AnsatzParams p;
    p.n_qubits = n_qubits;
    p.layers = layers;
    p.theta = Eigen::MatrixXd::Zero(layers, n_qubits);
    check_params(p);
    return p;
}

AnsatzParams AnsatzParams::random(int n_qubits, int layers,
                                  std::mt19937_64 &rng) {
    AnsatzParams p = zero(n_qubits, layers);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n_qubits; ++q) {
            p.theta(l, q) = dist(rng);
        }
    }
    return p;
}

Eigen::VectorXd AnsatzParams::flatten() const {
    Eigen::VectorXd v(parameter_count());
    int k = 0;
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n_qubits; ++q) {
            v(k++) = theta(l, q);
        }
    }
    return v;
}

AnsatzParams AnsatzParams::from_flat(int n_qubits, int layers,
                                     const Eigen::VectorXd &values) {
    if (values.size() != static_cast<Eigen::Index>(layers) * n_qubits) {
        throw std::invalid_argument("flat parameter size mismatch");
    }
    AnsatzParams p = zero(n_qubits, layers);
    int k = 0;
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n_qubits; ++q) {
            p.theta(l, q) = values(k++);
        }
    }
    return p;
}

double AnsatzParams::min_layers(int n_qubits) {
    return static_cast<double>(std::int64_t{1} << n_qubits) / n_qubits;
}

StateVector prepare_ansatz(const AnsatzParams &params) {
    check_params(params);
    const int n = params.n_qubits;
    StateVector state = StateVector::zero_state(n);
    // Wire w of the circuit diagram is qubit n-1-w; the entangling ladder
    // descends from the top wire.
    for (int l = 0; l < params.layers; ++l) {
        for (int w = 0; w < n; ++w) {
            detail::ry_inplace(state.amplitudes, n, n - 1 - w,
                               params.theta(l, w));
        }
        for (int w = 0; w + 1 < n; ++w) {
            detail::cx_inplace(state.amplitudes, n, n - 1 - w, n - 2 - w);
        }
    }
    return state;
}

double cost(const AnsatzParams &params, const DecomposedOperator &A,
            const StateVector &b) {
    check_problem(params, A, b);
    const CostParts parts = evaluate_parts(params, A, b);
    return -0.5 * parts.overlap * parts.overlap / parts.denominator;
}

double norm_r(const AnsatzParams &params, const DecomposedOperator &A,
              const StateVector &b, bool use_superposition) {
    check_problem(params, A, b);
    const StateVector psi = prepare_ansatz(params);
    const double denominator = expect_operator(psi, A);
    if (denominator <= 0.0) {
        throw SingularCostError("<psi|A|psi> is not positive; norm undefined");
    }
    const double overlap = use_superposition
                               ? overlap_via_superposition(psi, b)
                               : std::abs(inner(psi, b));
    return overlap / denominator;
}

Eigen::VectorXd gradient(const AnsatzParams &params,
                         const DecomposedOperator &A, const StateVector &b) {
    check_problem(params, A, b);
    const CostParts parts = evaluate_parts(params, A, b);
    const Eigen::VectorXd b_real = b.real_amplitudes();
    const double p = parts.overlap;
    const double q = parts.denominator;

    Eigen::VectorXd grad(params.parameter_count());
    int k = 0;
    for (int l = 0; l < params.layers; ++l) {
        for (int qi = 0; qi < params.n_qubits; ++qi) {
            AnsatzParams shifted = params;
            shifted.theta(l, qi) += kPi;
            const Eigen::VectorXd dpsi =
                0.5 * prepare_ansatz(shifted).real_amplitudes();
            const double dp = dpsi.dot(b_real);
            const double dq = 2.0 * dpsi.dot(parts.a_psi);
            grad(k++) = -(p * dp) / q + (p * p * dq) / (2.0 * q * q);
        }
    }
    return grad;
}

Eigen::VectorXd gradient_parameter_shift(const AnsatzParams &params,
                                         const DecomposedOperator &A,
                                         const StateVector &b) {
    check_problem(params, A, b);
    const CostParts parts = evaluate_parts(params, A, b);
    const double p2 = parts.overlap * parts.overlap;
    const double q = parts.denominator;

    auto shifted_terms = [&](const AnsatzParams &sp, double &p2_out,
                             double &q_out) {
        const StateVector psi = prepare_ansatz(sp);
        const double ov = std::real(inner(psi, b));
        p2_out = ov * ov;
        q_out = expect_operator(psi, A);
    };

    Eigen::VectorXd grad(params.parameter_count());
    int k = 0;
    for (int l = 0; l < params.layers; ++l) {
        for (int qi = 0; qi < params.n_qubits; ++qi) {
            AnsatzParams plus = params;
            AnsatzParams minus = params;
            plus.theta(l, qi) += kPi / 2.0;
            minus.theta(l, qi) -= kPi / 2.0;
            double p2p, qp, p2m, qm;
            shifted_terms(plus, p2p, qp);
            shifted_terms(minus, p2m, qm);
            const double dp2 = 0.5 * (p2p - p2m);
            const double dq = 0.5 * (qp - qm);
            grad(k++) = -0.5 * (dp2 * q - p2 * dq) / (q * q);
        }
    }
    return grad;
}

SolveResult vqls_solve(const DecomposedOperator &A, const StateVector &b,
                       const AnsatzParams &theta0,
                       const SolveOptions &options) {
    check_problem(theta0, A, b);
    if (options.tol <= 0.0) {
        throw std::invalid_argument("solve tolerance must be positive");
    }

    SolveResult result;
    result.theta_opt = theta0;

    // A pure identity operator has the trivial solution b / c.
    if (A.terms.empty()) {
        const double c = A.identity_coefficient;
        if (c <= 0.0) {
            throw SingularCostError("identity coefficient must be positive");
        }
        result.r_opt = 1.0 / c;
        result.solution = b.real_amplitudes() / c;
        result.cost = -0.5 / c;
        result.converged = true;
        return result;
    }

    const int n_params = theta0.parameter_count();
    const long circuits_f = circuits_per_cost(A);
    const long circuits_fg = circuits_f * (1 + n_params);
    const Eigen::VectorXd b_real = b.real_amplitudes();

    auto objective = [&](const Eigen::VectorXd &x,
                         Eigen::VectorXd &grad) -> double {
        const AnsatzParams p =
            AnsatzParams::from_flat(theta0.n_qubits, theta0.layers, x);
        const CostParts parts = evaluate_parts(p, A, b);
        const double ov = parts.overlap;
        const double q = parts.denominator;
        int k = 0;
        for (int l = 0; l < p.layers; ++l) {
            for (int qi = 0; qi < p.n_qubits; ++qi) {
                AnsatzParams shifted = p;
                shifted.theta(l, qi) += kPi;
                const Eigen::VectorXd dpsi =
                    0.5 * prepare_ansatz(shifted).real_amplitudes();
                const double dp = dpsi.dot(b_real);
                const double dq = 2.0 * dpsi.dot(parts.a_psi);
                grad(k++) = -(ov * dp) / q + (ov * ov * dq) / (2.0 * q * q);
            }
        }
        return -0.5 * ov * ov / q;
    };

    LbfgsOptions lbfgs_opts;
    lbfgs_opts.f_tol = options.tol;
    lbfgs_opts.grad_tol = options.tol;
    lbfgs_opts.max_evals = options.max_evals;
    lbfgs_opts.memory = options.lbfgs_memory;
    const LbfgsResult opt =
        lbfgs_minimize(objective, theta0.flatten(), lbfgs_opts);

    result.theta_opt =
        AnsatzParams::from_flat(theta0.n_qubits, theta0.layers, opt.x);
    result.n_function_evals = opt.n_evals * circuits_fg;
    result.n_iterations = opt.n_iterations;
    result.converged = opt.converged;
    result.cost = opt.f;

    // Gauge: fold a global sign flip into theta via a 2*pi rotation offset so
    // that the recovered solution has nonnegative overlap with b.
    StateVector psi = prepare_ansatz(result.theta_opt);
    if (std::real(inner(psi, b)) < 0.0) {
        result.theta_opt.theta(0, 0) += 2.0 * kPi;
        psi = prepare_ansatz(result.theta_opt);
    }
    result.r_opt = norm_r(result.theta_opt, A, b,
                          options.use_superposition_overlap);
    result.solution = result.r_opt * psi.real_amplitudes();
    return result;
}

} // namespace vqpde
