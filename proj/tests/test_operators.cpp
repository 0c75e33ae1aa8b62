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
#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "vqpde/operators.hpp"

using namespace vqpde;

namespace {

StateVector random_real_state(int n, std::mt19937 &rng) {
    std::normal_distribution<double> dist;
    Eigen::VectorXd v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = dist(rng);
    }
    return encode(v).state;
}

// Dense Pauli string builder, independent of the production code.
Eigen::MatrixXcd pauli_string_dense(const std::string &label) {
    Eigen::Matrix2cd single[4];
    single[0] << 1, 0, 0, 1;                                       // I
    single[1] << 0, 1, 1, 0;                                       // X
    single[2] << 0, Complex{0, -1}, Complex{0, 1}, 0;              // Y
    single[3] << 1, 0, 0, -1;                                      // Z
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
    for (char c : label) {
        const int idx = c == 'I' ? 0 : c == 'X' ? 1 : c == 'Y' ? 2 : 3;
        m = Eigen::kroneckerProduct(m, single[idx]).eval();
    }
    return m;
}

} // namespace

TEST_CASE("laplacian_1d_dense patterns") {
    SUBCASE("n=2 Dirichlet") {
        Eigen::MatrixXd expect(4, 4);
        expect << 2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2;
        CHECK((laplacian_1d_dense(2, Boundary::Dirichlet) - expect).norm() ==
              0.0);
    }
    SUBCASE("n=2 Neumann has unit corners") {
        const Eigen::MatrixXd m = laplacian_1d_dense(2, Boundary::Neumann);
        CHECK(m(0, 0) == 1.0);
        CHECK(m(3, 3) == 1.0);
        CHECK(m(1, 1) == 2.0);
    }
    SUBCASE("constants lie in the Neumann nullspace") {
        const Eigen::MatrixXd m = laplacian_1d_dense(3, Boundary::Neumann);
        CHECK((m * Eigen::VectorXd::Ones(8)).norm() == 0.0);
    }
}

TEST_CASE("decompose_laplacian_1d assembles exactly") {
    for (int n = 1; n <= 5; ++n) {
        for (const Boundary b : {Boundary::Dirichlet, Boundary::Neumann}) {
            const DecomposedOperator op = decompose_laplacian_1d(n, b);
            const Eigen::MatrixXd diff =
                to_dense(op) - laplacian_1d_dense(n, b);
            CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
        }
    }
    CHECK(decompose_laplacian_1d(3, Boundary::Dirichlet).term_count() == 3);
    CHECK(decompose_laplacian_1d(3, Boundary::Neumann).term_count() == 4);
}

TEST_CASE("decompose_laplacian_2d matches Kronecker assembly") {
    SUBCASE("mx = my = 1 Dirichlet") {
        const auto [ax, ay] = decompose_laplacian_2d(
            1, 1, Boundary::Dirichlet, Boundary::Dirichlet);
        const Eigen::MatrixXd eye2 = Eigen::MatrixXd::Identity(2, 2);
        const Eigen::MatrixXd a1 = laplacian_1d_dense(1, Boundary::Dirichlet);
        CHECK((to_dense(ax) - Eigen::kroneckerProduct(eye2, a1)).norm() ==
              0.0);
        CHECK((to_dense(ay) - Eigen::kroneckerProduct(a1, eye2)).norm() ==
              0.0);
    }
    SUBCASE("Kronecker sums for mx, my in {1,2}") {
        for (int mx = 1; mx <= 2; ++mx) {
            for (int my = 1; my <= 2; ++my) {
                const auto [ax, ay] = decompose_laplacian_2d(
                    mx, my, Boundary::Dirichlet, Boundary::Dirichlet);
                const Eigen::MatrixXd ix = Eigen::MatrixXd::Identity(
                    Eigen::Index{1} << mx, Eigen::Index{1} << mx);
                const Eigen::MatrixXd iy = Eigen::MatrixXd::Identity(
                    Eigen::Index{1} << my, Eigen::Index{1} << my);
                const Eigen::MatrixXd expect =
                    Eigen::kroneckerProduct(
                        iy, laplacian_1d_dense(mx, Boundary::Dirichlet)) +
                    Eigen::kroneckerProduct(
                        laplacian_1d_dense(my, Boundary::Dirichlet), ix);
                CHECK((to_dense(ax) + to_dense(ay) - expect)
                          .cwiseAbs()
                          .maxCoeff() == 0.0);
            }
        }
    }
    SUBCASE("Neumann y-operator annihilates constants") {
        const auto [ax, ay] = decompose_laplacian_2d(
            2, 2, Boundary::Neumann, Boundary::Neumann);
        CHECK((to_dense(ay) * Eigen::VectorXd::Ones(16)).norm() < 1e-14);
    }
}

TEST_CASE("divergence_dense patterns") {
    SUBCASE("n=2 Dirichlet with dx=0.5") {
        Eigen::MatrixXd expect(4, 4);
        expect << 0, 1, 0, 0, -1, 0, 1, 0, 0, -1, 0, 1, 0, 0, -1, 0;
        CHECK((divergence_dense(2, Boundary::Dirichlet, 0.5) - expect)
                  .norm() == 0.0);
    }
    SUBCASE("Dirichlet applied to a constant touches only the ends") {
        const double dx = 0.25;
        const Eigen::VectorXd out =
            divergence_dense(2, Boundary::Dirichlet, dx) *
            Eigen::VectorXd::Constant(4, 3.0);
        CHECK(out(0) == doctest::Approx(3.0 / (2.0 * dx)));
        CHECK(out(1) == 0.0);
        CHECK(out(2) == 0.0);
        CHECK(out(3) == doctest::Approx(-3.0 / (2.0 * dx)));
    }
    SUBCASE("Neumann variant, hand-evaluated 4x4 product") {
        // Ghost elimination puts -1 at the top-left corner and +1 at the
        // bottom-right; every row of B * const then cancels exactly.
        const double dx = 0.5;
        const double c = 2.0;
        Eigen::MatrixXd by_hand(4, 4);
        by_hand << -1, 1, 0, 0, -1, 0, 1, 0, 0, -1, 0, 1, 0, 0, -1, 1;
        by_hand /= 2.0 * dx;
        CHECK((divergence_dense(2, Boundary::Neumann, dx) - by_hand).norm() ==
              0.0);
        const Eigen::VectorXd out =
            divergence_dense(2, Boundary::Neumann, dx) *
            Eigen::VectorXd::Constant(4, c);
        CHECK(out.norm() == 0.0);
    }
}

TEST_CASE("reaction_implicit_operator") {
    SUBCASE("zero source gives the block-diagonal implicit operator") {
        const Eigen::Matrix2d K = Eigen::Matrix2d::Zero();
        const DecomposedOperator op =
            reaction_implicit_operator(2, K, 0.1, 0.3, Boundary::Dirichlet);
        const Eigen::MatrixXd expect =
            Eigen::MatrixXd::Identity(8, 8) +
            0.3 * Eigen::kroneckerProduct(
                      Eigen::Matrix2d::Identity(),
                      laplacian_1d_dense(2, Boundary::Dirichlet));
        CHECK((to_dense(op) - expect).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(op.term_count() == 3 + 3);
    }
    SUBCASE("diagonal rates scale the blocks") {
        Eigen::Matrix2d K;
        K << 1, 0, 0, 2;
        const DecomposedOperator op =
            reaction_implicit_operator(2, K, 0.1, 0.0, Boundary::Dirichlet);
        const Eigen::MatrixXd dense = to_dense(op);
        for (int i = 0; i < 4; ++i) {
            CHECK(dense(i, i) == doctest::Approx(0.9));
            CHECK(dense(4 + i, 4 + i) == doctest::Approx(0.8));
        }
    }
    SUBCASE("coupled rates match the Kronecker oracle") {
        Eigen::Matrix2d K;
        K << 0.2, 0.5, 0.5, -0.1;
        const double dt = 0.07;
        const double delta = 0.4;
        const DecomposedOperator op =
            reaction_implicit_operator(2, K, dt, delta, Boundary::Neumann);
        const Eigen::MatrixXd expect =
            Eigen::MatrixXd::Identity(8, 8) +
            delta * Eigen::kroneckerProduct(
                        Eigen::Matrix2d::Identity(),
                        laplacian_1d_dense(2, Boundary::Neumann)) -
            dt * Eigen::kroneckerProduct(K,
                                         Eigen::MatrixXd::Identity(4, 4));
        CHECK((to_dense(op) - expect).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("asymmetric K is rejected") {
        Eigen::Matrix2d K;
        K << 0, 1, 0, 0;
        CHECK_THROWS_AS(
            reaction_implicit_operator(2, K, 0.1, 0.1, Boundary::Dirichlet),
            std::invalid_argument);
    }
}

TEST_CASE("expectation values against dense quadratic forms") {
    std::mt19937 rng(23);

    SUBCASE("identity-only operator") {
        DecomposedOperator op;
        op.n_qubits = 3;
        op.identity_coefficient = 2.5;
        const StateVector s = random_real_state(3, rng);
        CHECK(expect_operator(s, op) == doctest::Approx(2.5).epsilon(1e-12));
    }
    SUBCASE("uniform superposition in the Neumann nullspace") {
        const DecomposedOperator op =
            decompose_laplacian_1d(3, Boundary::Neumann);
        const StateVector s = encode(Eigen::VectorXd::Ones(8)).state;
        CHECK(std::abs(expect_operator(s, op)) < 1e-10);
    }
    SUBCASE("random states match the dense form") {
        for (int n = 2; n <= 5; ++n) {
            for (const Boundary b :
                 {Boundary::Dirichlet, Boundary::Neumann}) {
                const DecomposedOperator op = decompose_laplacian_1d(n, b);
                const Eigen::MatrixXd dense = laplacian_1d_dense(n, b);
                for (int trial = 0; trial < 5; ++trial) {
                    const StateVector s = random_real_state(n, rng);
                    const Eigen::VectorXd v = s.real_amplitudes();
                    CHECK(std::abs(expect_operator(s, op) -
                                   v.dot(dense * v)) < 1e-10);
                }
            }
        }
    }
    SUBCASE("simple-term examples") {
        HamiltonianTerm ident;
        ident.weight = 1.0;
        ident.factors = {Factor::I, Factor::I, Factor::I};
        CHECK(expect_term(random_real_state(3, rng), ident) ==
              doctest::Approx(1.0).epsilon(1e-12));

        HamiltonianTerm x_low;
        x_low.weight = 1.0;
        x_low.factors = {Factor::X, Factor::I, Factor::I};
        CHECK(std::abs(expect_term(StateVector::zero_state(3), x_low)) <
              1e-15);

        // I0 (x) X on (|00> + |01>)/sqrt(2); dense 4x4 oracle.
        HamiltonianTerm projected;
        projected.weight = 1.0;
        projected.factors = {Factor::X, Factor::P0};
        Eigen::VectorXd v(4);
        v << 1, 1, 0, 0;
        const StateVector s = encode(v).state;
        Eigen::MatrixXd dense(4, 4);
        dense << 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0;
        const Eigen::VectorXd amp = s.real_amplitudes();
        CHECK(expect_term(s, projected) ==
              doctest::Approx(amp.dot(dense * amp)).epsilon(1e-12));
        CHECK(expect_term(s, projected) == doctest::Approx(1.0));
    }
    SUBCASE("malformed factor list throws") {
        HamiltonianTerm bad;
        bad.weight = 1.0;
        bad.factors = {Factor::X};
        CHECK_THROWS_AS(expect_term(StateVector::zero_state(2), bad),
                        std::invalid_argument);
    }
}

TEST_CASE("apply_operator and term_bilinear agree with dense routes") {
    std::mt19937 rng(29);
    const DecomposedOperator op = add_identity(
        scale_operator(decompose_laplacian_1d(3, Boundary::Dirichlet), 0.7),
        1.0);
    const Eigen::MatrixXd dense =
        Eigen::MatrixXd::Identity(8, 8) +
        0.7 * laplacian_1d_dense(3, Boundary::Dirichlet);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector a = random_real_state(3, rng);
        const StateVector b = random_real_state(3, rng);
        const Eigen::VectorXd x = b.real_amplitudes();
        CHECK((apply_operator(op, x) - dense * x).lpNorm<Eigen::Infinity>() <
              1e-12);
        double bilinear = op.identity_coefficient *
                          a.real_amplitudes().dot(x);
        for (const auto &term : op.terms) {
            bilinear += term.weight * term_bilinear(a, b, term).real();
        }
        CHECK(bilinear == doctest::Approx(a.real_amplitudes().dot(dense * x))
                              .epsilon(1e-10));
    }
}

TEST_CASE("operator terms assemble to symmetric matrices") {
    const auto check_symmetric = [](const DecomposedOperator &op) {
        for (const auto &term : op.terms) {
            const Eigen::MatrixXd m = term_dense(term, op.n_qubits);
            CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
        }
    };
    check_symmetric(decompose_laplacian_1d(3, Boundary::Neumann));
    const auto [ax, ay] =
        decompose_laplacian_2d(2, 2, Boundary::Neumann, Boundary::Dirichlet);
    check_symmetric(ax);
    check_symmetric(ay);
    Eigen::Matrix2d K;
    K << 1, 0.3, 0.3, -2;
    check_symmetric(
        reaction_implicit_operator(2, K, 0.1, 0.2, Boundary::Dirichlet));
}

TEST_CASE("implicit operators stay positive definite") {
    for (int n = 1; n <= 4; ++n) {
        for (const double delta : {0.0, 0.5, 1.0, 4.0}) {
            const Eigen::MatrixXd m =
                Eigen::MatrixXd::Identity(Eigen::Index{1} << n,
                                          Eigen::Index{1} << n) +
                delta * laplacian_1d_dense(n, Boundary::Dirichlet);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
            CHECK(eig.eigenvalues().minCoeff() >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("pauli_coefficients_diagnostic") {
    SUBCASE("identity matrix") {
        const auto coeffs =
            pauli_coefficients_diagnostic(Eigen::MatrixXd::Identity(4, 4));
        CHECK(coeffs.at("II") == doctest::Approx(1.0));
        for (const auto &[label, value] : coeffs) {
            if (label != "II") {
                CHECK(std::abs(value) < 1e-14);
            }
        }
    }
    SUBCASE("one-qubit Dirichlet Laplacian") {
        const auto coeffs = pauli_coefficients_diagnostic(
            laplacian_1d_dense(1, Boundary::Dirichlet));
        CHECK(coeffs.at("I") == doctest::Approx(2.0));
        CHECK(coeffs.at("X") == doctest::Approx(-1.0));
        CHECK(std::abs(coeffs.at("Y")) < 1e-14);
        CHECK(std::abs(coeffs.at("Z")) < 1e-14);
    }
    SUBCASE("two-qubit reconstruction") {
        const Eigen::MatrixXd a = laplacian_1d_dense(2, Boundary::Dirichlet);
        const auto coeffs = pauli_coefficients_diagnostic(a);
        Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(4, 4);
        for (const auto &[label, value] : coeffs) {
            rebuilt += value * pauli_string_dense(label);
        }
        CHECK((rebuilt.real() - a).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(rebuilt.imag().cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("non-power-of-two dimension throws") {
        CHECK_THROWS_AS(
            pauli_coefficients_diagnostic(Eigen::MatrixXd::Identity(3, 3)),
            std::invalid_argument);
    }
}
