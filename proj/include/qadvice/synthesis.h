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

#ifndef QADVICE_SYNTHESIS_H
#define QADVICE_SYNTHESIS_H

#include <stdexcept>
#include <utility>

#include "qadvice/circuit.h"
#include "qadvice/linalg.h"
#include "qadvice/qustring.h"
#include "qadvice/sk_net.h"

namespace qadvice {

class SynthesisError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested epsilon is below what the implementation can honestly certify.
class UnsupportedPrecisionError : public SynthesisError {
    using SynthesisError::SynthesisError;
};

/// Group-commutator factors: returns (V, W) with V W V^dag W^dag = delta.
/// Returns (V, W) with V W V^dag W^dag equal to delta up to sign. `twist` rotates
/// the pair about the axis of delta, which leaves the commutator unchanged.
std::pair<Quaternion, Quaternion> balanced_commutator(const Quaternion &delta, double twist = 0);

struct SkApproximation {
    Circuit circuit{1};
    /// Phase-quotiented operator distance, recomputed with operator_norm.
    double error = 0;
    /// Recursion depth at which the target was met.
    size_t depth = 0;
};

/// Solovay-Kitaev approximation of a single-qubit unitary by a width-1 circuit
/// with phase-quotiented operator distance below epsilon.
///
/// Depth 0 is a nearest-neighbour lookup in the base net; each further level
/// corrects the residual with a balanced group commutator. Depth grows until
/// the target is met.
SkApproximation sk_approximate_detailed(const Matrix &u, double epsilon, const SkNet &net = SkNet::standard());
Circuit sk_approximate(const Matrix &u, double epsilon, const SkNet &net = SkNet::standard());

enum class TargetKind { STATE, UNITARY };

struct SynthesisReport {
    TargetKind target_kind = TargetKind::STATE;
    size_t k = 0;
    double epsilon = 0;
    /// Recomputed by simulation: ||C|0^k> - phi|| or ||U(C) - U||, each minimized over global phase.
    double achieved_error = 0;
    Circuit circuit{1};
    size_t size = 0;
    /// 2^{2k} log2^3(1/eps) for states, 2^{3k} log2^3(1/eps) for unitaries.
    double bound_value = 0;
    double constant_ratio = 0;
    /// Continuous rotations handed to sk_approximate, and the sum of their achieved errors.
    size_t rotation_count = 0;
    double rotation_error_sum = 0;
};

/// Circuit C with ||C|0^k> - target|| < epsilon (up to global phase), k <= 4, epsilon >= 1e-3.
///
/// Very short exact circuits are found by direct search. Otherwise the target
/// is prepared by a ladder of uniformly controlled Ry rotations for the
/// magnitudes followed by uniformly controlled Rz rotations for the phases,
/// each expanded into CNOTs and single-qubit rotations; every rotation then
/// gets an equal share of the error budget.
SynthesisReport synthesize_state(const Qustring &target, double epsilon, const SkNet &net = SkNet::standard());

/// Circuit C with ||U(C) - u|| < epsilon (up to global phase), k <= 2, epsilon >= 1e-2.
///
/// Uses a two-level (Givens) decomposition in Gray-code order so that every
/// two-level factor is a singly controlled single-qubit gate.
SynthesisReport synthesize_unitary(const Matrix &u, double epsilon, const SkNet &net = SkNet::standard());

/// u = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta); returns {alpha, beta, gamma, delta}.
std::array<double, 4> zyz_decompose(const Matrix &u);

}  // namespace qadvice

#endif
