// Copyright 2026 The qadvice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qadvice/synthesis.h"

#include <random>

#include "gtest/gtest.h"

#include "oracles.h"

using namespace qadvice;
using namespace qadvice::testing;

namespace {

Matrix oracle_rz(double t) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::exp(Complex(0, -t / 2));
    m(1, 1) = std::exp(Complex(0, t / 2));
    return m;
}

Matrix oracle_ry(double t) {
    Matrix m(2, 2);
    m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    return m;
}

/// min over phase of ||U(c)|0..0> - target||, from the Kronecker oracle.
double oracle_state_error(const Circuit &c, const Qustring &target) {
    Matrix u = oracle_unitary(c);
    Complex overlap = 0;
    for (size_t i = 0; i < target.dimension(); i++) {
        overlap += std::conj(target[i]) * u(i, 0);
    }
    return std::sqrt(std::max(0.0, 2 - 2 * std::abs(overlap)));
}

/// Rotation angle of a unit quaternion, in [0, pi] after quotienting the sign.
double rotation_angle(const Quaternion &q) {
    return 2 * std::acos(std::min(1.0, std::abs(q.w)));
}

}  // namespace

TEST(synthesis, zyz_reconstructs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        Matrix u = random_unitary(2, rng);
        auto [alpha, beta, gamma, delta] = zyz_decompose(u);
        Matrix r = std::exp(Complex(0, alpha)) * oracle_rz(beta) * oracle_ry(gamma) * oracle_rz(delta);
        ASSERT_LE(svd_norm(r - u), 1e-10);
    }
    auto d = zyz_decompose(Matrix::Identity(2, 2));
    EXPECT_LE(svd_norm(std::exp(Complex(0, d[0])) * oracle_rz(d[1]) * oracle_ry(d[2]) * oracle_rz(d[3]) -
                       Matrix::Identity(2, 2)),
              1e-12);
}

TEST(synthesis, balanced_commutator_reproduces_delta) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> angle(0, 0.6);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 200; trial++) {
        double ax = normal(rng), ay = normal(rng), az = normal(rng);
        double norm = std::sqrt(ax * ax + ay * ay + az * az);
        Quaternion delta = Quaternion::rotation(angle(rng), ax / norm, ay / norm, az / norm);
        for (double twist : {0.0, 1.0, 2.5}) {
            auto [v, w] = balanced_commutator(delta, twist);
            Matrix vm = v.to_matrix(), wm = w.to_matrix();
            Matrix comm = vm * wm * vm.adjoint() * wm.adjoint();
            ASSERT_LE(scanned_distance_up_to_phase(comm, delta.to_matrix()), 1e-7);
            // Balanced: both factors rotate by the same angle.
            ASSERT_NEAR(rotation_angle(v), rotation_angle(w), 1e-9);
        }
    }
}

TEST(synthesis, sk_exact_words) {
    auto h = sk_approximate_detailed(gate_matrix(GateKind::H), 0.5);
    EXPECT_EQ(h.circuit.size(), 1u);
    EXPECT_NEAR(h.error, 0, 1e-7);
    Matrix s = gate_matrix(GateKind::T) * gate_matrix(GateKind::T);
    auto c = sk_approximate_detailed(s, 1e-3);
    EXPECT_LE(c.circuit.size(), 2u);
    EXPECT_NEAR(c.error, 0, 1e-7);
    EXPECT_EQ(c.depth, 0u);
}

TEST(synthesis, sk_random_unitaries) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; trial++) {
        Matrix u = random_unitary(2, rng);
        for (double eps : {1e-1, 1e-2}) {
            auto r = sk_approximate_detailed(u, eps);
            double oracle = scanned_distance_up_to_phase(oracle_unitary(r.circuit), u);
            ASSERT_LT(oracle, eps);
            ASSERT_NEAR(r.error, oracle, 1e-6);
            ASSERT_EQ(r.circuit.width(), 1u);
        }
    }
}

TEST(synthesis, sk_is_deterministic) {
    std::mt19937_64 rng(14);
    Matrix u = random_unitary(2, rng);
    EXPECT_EQ(sk_approximate(u, 1e-2), sk_approximate(u, 1e-2));
}

TEST(synthesis, sk_length_grows_with_precision) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 5; trial++) {
        Matrix u = random_unitary(2, rng);
        auto coarse = sk_approximate_detailed(u, 1e-1);
        auto fine = sk_approximate_detailed(u, 1e-3);
        EXPECT_LT(fine.error, 1e-3);
        EXPECT_GE(fine.depth, coarse.depth);
    }
}

TEST(synthesis, sk_errors) {
    Matrix h = gate_matrix(GateKind::H);
    EXPECT_THROW(sk_approximate(h, 1e-7), UnsupportedPrecisionError);
    EXPECT_THROW(sk_approximate(h, 0), UnsupportedPrecisionError);
    EXPECT_THROW(sk_approximate(h, -1), UnsupportedPrecisionError);
    EXPECT_THROW(sk_approximate(2 * h, 0.1), std::invalid_argument);
    EXPECT_THROW(sk_approximate(Matrix::Identity(4, 4), 0.1), std::invalid_argument);
}

TEST(synthesis, state_examples) {
    for (size_t k = 1; k <= 4; k++) {
        auto r = synthesize_state(Qustring::zero(k), 0.1);
        EXPECT_EQ(r.size, 0u);
        EXPECT_EQ(r.achieved_error, 0);
        EXPECT_EQ(r.k, k);
    }
    auto plus = Qustring::from_amplitudes({std::sqrt(0.5), std::sqrt(0.5)});
    auto r = synthesize_state(plus, 1e-3);
    ASSERT_EQ(r.circuit.size(), 1u);
    EXPECT_EQ(r.circuit.gates()[0].kind, GateKind::H);
    EXPECT_NEAR(r.achieved_error, 0, 1e-7);
    EXPECT_EQ(r.target_kind, TargetKind::STATE);
}

TEST(synthesis, state_random_targets) {
    std::mt19937_64 rng(16);
    for (size_t k = 1; k <= 3; k++) {
        for (int trial = 0; trial < 5; trial++) {
            auto target = random_state(k, rng);
            auto r = synthesize_state(target, 0.1);
            double oracle = oracle_state_error(r.circuit, target);
            ASSERT_LT(oracle, 0.1);
            ASSERT_NEAR(r.achieved_error, oracle, 1e-7);
            ASSERT_EQ(r.size, r.circuit.size());
            double bound = std::pow(2.0, 2.0 * (double)k) * std::pow(std::log2(10.0), 3);
            ASSERT_NEAR(r.bound_value, bound, 1e-9 * bound);
            ASSERT_NEAR(r.constant_ratio, (double)r.size / bound, 1e-12);
        }
    }
}

TEST(synthesis, state_budget_audit) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; trial++) {
        auto target = random_state(1 + trial % 3, rng);
        auto r = synthesize_state(target, 0.1);
        ASSERT_GE(r.rotation_error_sum + 1e-9, r.achieved_error);
        ASSERT_LT(r.rotation_error_sum, 0.1 + 1e-12);
    }
}

TEST(synthesis, state_fine_precision) {
    std::mt19937_64 rng(18);
    auto target = random_state(2, rng);
    auto r = synthesize_state(target, 1e-3);
    EXPECT_LT(oracle_state_error(r.circuit, target), 1e-3);
}

TEST(synthesis, state_errors) {
    EXPECT_THROW(synthesize_state(Qustring::zero(5), 0.1), std::invalid_argument);
    EXPECT_THROW(synthesize_state(Qustring::zero(2), 1e-4), UnsupportedPrecisionError);
}

TEST(synthesis, unitary_examples) {
    auto cx = synthesize_unitary(gate_matrix(GateKind::CNOT), 1e-2);
    ASSERT_EQ(cx.size, 1u);
    EXPECT_EQ(cx.circuit.gates()[0].kind, GateKind::CNOT);
    EXPECT_NEAR(cx.achieved_error, 0, 1e-7);

    Matrix h = gate_matrix(GateKind::H);
    auto hh = synthesize_unitary(kron(h, h), 1e-2);
    EXPECT_EQ(hh.size, 2u);
    EXPECT_NEAR(hh.achieved_error, 0, 1e-7);
    EXPECT_EQ(hh.target_kind, TargetKind::UNITARY);
}

TEST(synthesis, unitary_random_targets) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; trial++) {
        Matrix u = random_unitary(2, rng);
        auto r = synthesize_unitary(u, 0.05);
        ASSERT_LT(scanned_distance_up_to_phase(oracle_unitary(r.circuit), u), 0.05);
    }
    for (int trial = 0; trial < 5; trial++) {
        Matrix u = random_unitary(4, rng);
        auto r = synthesize_unitary(u, 1e-2);
        double oracle = scanned_distance_up_to_phase(oracle_unitary(r.circuit), u);
        ASSERT_LT(oracle, 1e-2);
        ASSERT_NEAR(r.achieved_error, oracle, 1e-6);
        double bound = std::pow(2.0, 6.0) * std::pow(std::log2(100.0), 3);
        ASSERT_NEAR(r.bound_value, bound, 1e-9 * bound);
    }
}

TEST(synthesis, unitary_errors) {
    std::mt19937_64 rng(20);
    EXPECT_THROW(synthesize_unitary(random_unitary(8, rng), 0.1), std::invalid_argument);
    EXPECT_THROW(synthesize_unitary(random_unitary(4, rng), 1e-3), UnsupportedPrecisionError);
    EXPECT_THROW(synthesize_unitary(2 * Matrix::Identity(2, 2), 0.1), std::invalid_argument);
}
