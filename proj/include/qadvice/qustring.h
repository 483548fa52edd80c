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

#ifndef QADVICE_QUSTRING_H
#define QADVICE_QUSTRING_H

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qadvice {

using Complex = std::complex<double>;

/// A pure state of n qubits stored as 2^n dense amplitudes.
///
/// Qubit 0 is the most significant bit of the basis index, so |q_0 q_1 ... q_{n-1}>
/// reads left to right. A state built by `uniform` additionally remembers its
/// support size, which makes its normalization exact: each of the s nonzero
/// amplitudes is 1/sqrt(s).
class Qustring {
   public:
    /// |0...0> on n qubits.
    static Qustring zero(size_t n);
    static Qustring basis(size_t n, uint64_t index);
    /// Validates the length is a power of two and the norm is 1 within tolerance.
    static Qustring from_amplitudes(std::vector<Complex> amplitudes);
    /// Equal superposition over the given distinct basis indices.
    static Qustring uniform(size_t n, std::span<const uint64_t> support);

    size_t num_qubits() const {
        return n_;
    }
    size_t dimension() const {
        return amps_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amps_;
    }
    Complex operator[](uint64_t index) const {
        return amps_[index];
    }
    /// Support size when the state was built as an exact uniform superposition.
    std::optional<uint64_t> uniform_support() const {
        return uniform_support_;
    }

    double norm_squared() const;

   private:
    friend class StateBuilder;
    Qustring(size_t n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
    }
    size_t n_ = 0;
    std::vector<Complex> amps_;
    std::optional<uint64_t> uniform_support_;
};

/// Mutable amplitude buffer used by simulators; `finish` re-checks normalization.
class StateBuilder {
   public:
    explicit StateBuilder(const Qustring &start) : n_(start.n_), amps_(start.amps_) {
    }
    size_t num_qubits() const {
        return n_;
    }
    std::vector<Complex> &amplitudes() {
        return amps_;
    }
    Qustring finish(double tolerance) &&;

   private:
    size_t n_;
    std::vector<Complex> amps_;
};

/// Born-rule marginal over the listed qubits. Keys list the measured bits in
/// the order the qubits were given.
std::map<std::string, double> measure_probs(const Qustring &s, std::span<const size_t> qubits);

/// Euclidean norm of the amplitude difference.
double l2_distance(const Qustring &a, const Qustring &b);

/// min over global phase phi of || a - e^{i phi} b ||, equal to sqrt(2 - 2 |<b|a>|).
double l2_distance_up_to_phase(const Qustring &a, const Qustring &b);

Complex inner_product(const Qustring &a, const Qustring &b);

}  // namespace qadvice

#endif
