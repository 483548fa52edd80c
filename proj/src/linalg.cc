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

#include "qadvice/linalg.h"

#include <algorithm>
#include <cmath>

#include "qadvice/config.h"

namespace qadvice {

Matrix gate_matrix(GateKind kind) {
    if (kind == GateKind::CNOT) {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
        return m;
    }
    Circuit c(1);
    c.append(kind, 0);
    return circuit_unitary(c);
}

Matrix circuit_unitary(const Circuit &c) {
    if (c.width() > 12) {
        throw std::invalid_argument("circuit_unitary limited to 12 qubits.");
    }
    size_t d = size_t{1} << c.width();
    Matrix u(d, d);
    for (size_t col = 0; col < d; col++) {
        auto out = apply(c, Qustring::basis(c.width(), col));
        for (size_t row = 0; row < d; row++) {
            u(row, col) = out[row];
        }
    }
    return u;
}

double operator_norm(const Matrix &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("operator_norm requires a square matrix.");
    }
    if (a.rows() == 0) {
        return 0;
    }
    Matrix gram = a.adjoint() * a;
    double scale = gram.norm();
    if (scale == 0) {
        return 0;
    }
    Matrix power = gram / scale;
    for (int step = 0; step < 64; step++) {
        Matrix next = power * power;
        double f = next.norm();
        if (f == 0) {
            break;
        }
        next /= f;
        double change = (next - power).norm();
        power = std::move(next);
        if (change < 1e-15) {
            break;
        }
    }
    Eigen::Index best = 0;
    double best_norm = -1;
    for (Eigen::Index j = 0; j < power.cols(); j++) {
        double v = power.col(j).norm();
        if (v > best_norm) {
            best_norm = v;
            best = j;
        }
    }
    Eigen::VectorXcd v = power.col(best);
    // One more plain power step polishes the direction before the Rayleigh quotient.
    v = gram * v;
    double vv = v.squaredNorm();
    if (vv == 0) {
        return 0;
    }
    double rayleigh = (v.adjoint() * gram * v)(0, 0).real() / vv;
    return std::sqrt(std::max(0.0, rayleigh));
}

Complex best_relative_phase(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("best_relative_phase on matrices of different shapes.");
    }
    Matrix w = b.adjoint() * a;
    Eigen::ComplexEigenSolver<Matrix> solver(w);
    std::vector<double> angles;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        double t = std::arg(solver.eigenvalues()(k));
        if (t < 0) {
            t += 2 * M_PI;
        }
        angles.push_back(t);
    }
    std::sort(angles.begin(), angles.end());
    // The smallest arc covering every eigenphase is the complement of the widest gap.
    double widest = -1;
    double arc_start = 0;
    for (size_t k = 0; k < angles.size(); k++) {
        double from = angles[k];
        double to = k + 1 < angles.size() ? angles[k + 1] : angles[0] + 2 * M_PI;
        if (to - from > widest) {
            widest = to - from;
            arc_start = to;
        }
    }
    double arc_length = 2 * M_PI - widest;
    return std::polar(1.0, arc_start + arc_length / 2);
}

double operator_distance_up_to_phase(const Matrix &a, const Matrix &b) {
    Complex phase = best_relative_phase(a, b);
    return operator_norm(a - phase * b);
}

bool is_unitary(const Matrix &a, double tolerance) {
    if (a.rows() != a.cols()) {
        return false;
    }
    Matrix id = Matrix::Identity(a.rows(), a.cols());
    return operator_norm(a.adjoint() * a - id) <= tolerance;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix ry(double theta) {
    Matrix m(2, 2);
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    m << c, -s, s, c;
    return m;
}

Matrix rz(double theta) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -theta / 2);
    m(1, 1) = std::polar(1.0, theta / 2);
    return m;
}

Matrix random_unitary(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Matrix g(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (size_t j = 0; j < dim; j++) {
        Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

Qustring random_state(size_t num_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(size_t{1} << num_qubits);
    double t = 0;
    for (auto &a : amps) {
        a = Complex(normal(rng), normal(rng));
        t += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(t);
    }
    return Qustring::from_amplitudes(std::move(amps));
}

Qustring apply_matrix(const Matrix &u, const Qustring &s) {
    if ((size_t)u.rows() != s.dimension() || (size_t)u.cols() != s.dimension()) {
        throw std::invalid_argument("apply_matrix dimension mismatch.");
    }
    std::vector<Complex> out(s.dimension());
    for (size_t i = 0; i < s.dimension(); i++) {
        Complex t = 0;
        for (size_t j = 0; j < s.dimension(); j++) {
            t += u(i, j) * s[j];
        }
        out[i] = t;
    }
    return Qustring::from_amplitudes(std::move(out));
}

}  // namespace qadvice
