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

#ifndef QADVICE_FINGERPRINT_H
#define QADVICE_FINGERPRINT_H

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qadvice/bit_string.h"
#include "qadvice/prime_field.h"
#include "qadvice/qustring.h"
#include "qadvice/rational.h"

namespace qadvice {

/// Quantum fingerprint of x over GF(q):
///   |phi(x)> = q^{-1/2} sum_z |z>|p_x(z)>
/// on two registers of ceil(log2 q) qubits each (z first).
class Fingerprint {
   public:
    Fingerprint(BitString source, PrimeField field);

    const BitString &source() const {
        return source_;
    }
    size_t source_length() const {
        return source_.size();
    }
    const PrimeField &field() const {
        return field_;
    }
    /// ceil(log2 q), the width of each register.
    size_t register_width() const {
        return field_.register_width();
    }
    size_t num_qubits() const {
        return 2 * register_width();
    }
    /// Basis index of |z>|p_x(z)>.
    uint64_t basis_index(uint64_t z) const;
    /// The q basis indices carrying amplitude 1/sqrt(q), in increasing z.
    std::vector<uint64_t> support() const;
    /// Dense state; refuses above 24 qubits.
    Qustring state() const;

   private:
    BitString source_;
    PrimeField field_;
};

/// Field q = least_prime_above(ceil(|x| / epsilon)); requires 0 < epsilon <= 1.
Fingerprint make_fingerprint(const BitString &x, const Rational &epsilon);

/// Implementation constant c in: advice qubits <= c * f * log2(n) + c whenever f <= n.
inline constexpr size_t ADVICE_LENGTH_CONSTANT = 32;

/// The advice |0^m 1> |phi(y_1)> ... |phi(y_m)> for a set of at most 2f strings of length n.
struct FingerprintAdvice {
    size_t n = 0;
    size_t f = 0;
    PrimeField field{2};
    std::vector<BitString> members;
    std::vector<Fingerprint> fingerprints;

    size_t k() const {
        return 2 * f * n;
    }
    size_t m() const {
        return members.size();
    }
    /// The marker 0^m 1.
    BitString prefix() const;
    /// (m + 1) + m * 2 ceil(log2 q).
    size_t length_qubits() const;
    /// m (n - 1) / q, the exact false-accept ceiling for non-members.
    Rational soundness_bound() const;

    /// {"n", "f", "q", "members": [hex...]}; fingerprints are rebuilt on load.
    std::string to_json() const;
    static FingerprintAdvice from_json(std::string_view text);
};

/// k = 2fn and q = least_prime_above(4k), i.e. fingerprints at epsilon = 1/4.
FingerprintAdvice build_advice(std::vector<BitString> members, size_t n, size_t f);

struct MembershipResult {
    bool accept;
    Rational acceptance_probability;
};

/// Runs the membership algorithm: measure the z register of each fingerprint
/// and accept on the first i with p_x(z) equal to the measured value register.
/// The exact probability is 1 - prod_i (1 - a_i / q) with a_i = agreement_count(x, y_i).
MembershipResult membership_test(const BitString &x, const FingerprintAdvice &advice, std::mt19937_64 &rng);

/// Exact acceptance probability only.
Rational acceptance_probability(const BitString &x, const FingerprintAdvice &advice);

/// Acceptance probability of the single-fingerprint check on an arbitrary
/// (possibly approximate) two-register state over `field`. Basis states whose
/// z register falls outside the field reject.
double fingerprint_check_probability(const BitString &x, const Qustring &state, const PrimeField &field);

/// Applies |z>|v> -> |z>|v xor p_y(z)> (identity for z >= q) to `z_register` (x) |0>.
/// With the exact uniform superposition over the field this yields |phi(y)>.
Qustring load_fingerprint_values(const BitString &y, const PrimeField &field, const Qustring &z_register);

}  // namespace qadvice

#endif
