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

#ifndef QADVICE_LINALG_H
#define QADVICE_LINALG_H

#include <random>

#include <Eigen/Dense>

#include "qadvice/circuit.h"
#include "qadvice/qustring.h"

namespace qadvice {

using Matrix = Eigen::MatrixXcd;

/// 2x2 for single-qubit kinds; 4x4 for CNOT with the control as qubit 0.
Matrix gate_matrix(GateKind kind);

/// Dense U(C), built column by column by simulating each basis input.
Matrix circuit_unitary(const Circuit &c);

/// Largest singular value of a square matrix.
///
/// Runs the power method on A^dag A, squaring the iteration operator so that
/// each step doubles the number of power steps, starting from every basis
/// vector at once. The column with the largest norm seeds a final Rayleigh
/// quotient.
double operator_norm(const Matrix &a);

/// Phase e^{i phi} minimizing || a - e^{i phi} b || for unitary a, b.
Complex best_relative_phase(const Matrix &a, const Matrix &b);

/// min over phi of || a - e^{i phi} b ||, evaluated with operator_norm.
double operator_distance_up_to_phase(const Matrix &a, const Matrix &b);

/// || a^dag a - I || <= tolerance.
bool is_unitary(const Matrix &a, double tolerance);

Matrix kron(const Matrix &a, const Matrix &b);

/// exp(-i theta Y / 2).
Matrix ry(double theta);
/// exp(-i theta Z / 2).
Matrix rz(double theta);

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian matrix.
Matrix random_unitary(size_t dim, std::mt19937_64 &rng);
/// Haar-distributed pure state.
Qustring random_state(size_t num_qubits, std::mt19937_64 &rng);

/// Applies a dense matrix (dimension 2^n) to a state.
Qustring apply_matrix(const Matrix &u, const Qustring &s);

}  // namespace qadvice

#endif
