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

#ifndef QADVICE_QRAC_H
#define QADVICE_QRAC_H

#include <array>
#include <cstdint>
#include <vector>

#include "qadvice/bit_string.h"
#include "qadvice/qustring.h"

namespace qadvice {

/// H(p) = -p log2 p - (1-p) log2 (1-p), with H(0) = H(1) = 0.
double binary_entropy(double p);

/// ceil((1 - H(p)) n), the fewest qubits any (n, m, p) random access code can use.
/// Requires 1/2 < p <= 1.
size_t nayak_min_qubits(size_t n, double p);

/// Two-outcome projective measurement given as an orthonormal basis of the
/// carrier space, each basis vector labelled with the outcome bit it reports.
struct BinaryMeasurement {
    std::vector<Qustring> basis;
    std::vector<uint8_t> outcome;

    /// Probability of reporting `bit` on state s.
    double probability(const Qustring &s, bool bit) const;
};

/// An encoding of n bits into m qubits, with one measurement per bit position.
struct RacScheme {
    size_t n = 0;
    size_t m = 0;
    /// codewords[x.index()] encodes x.
    std::vector<Qustring> codewords;
    /// measurements[i] recovers x_{i+1}.
    std::vector<BinaryMeasurement> measurements;

    const Qustring &encode(const BitString &x) const;
    /// Pr[measurement i reports x_{i+1} on the codeword of x].
    double success_probability(const BitString &x, size_t i) const;
};

/// min over all x and i of success_probability. Validates the scheme first.
double scheme_success(const RacScheme &s);

using BlochVector = std::array<double, 3>;

/// The single-qubit pure state with the given (unit) Bloch vector.
Qustring bloch_state(const BlochVector &r);
/// Measurement reporting 0 along +axis and 1 along -axis.
BinaryMeasurement axis_measurement(const BlochVector &axis);

/// Two bits in one qubit: Bloch vector ((-1)^{b2}, 0, (-1)^{b1}) / sqrt 2, read in Z then X.
RacScheme rac21_scheme();
/// Three bits in one qubit: ((-1)^{b2}, (-1)^{b3}, (-1)^{b1}) / sqrt 3, read in Z, X, Y.
RacScheme rac31_scheme();

struct RacSearchResult {
    double best_p = 0;
    RacScheme best_scheme;
    size_t best_start = 0;
};

/// Multi-start coordinate ascent over the measurement axes of an (n, 1, p) code.
///
/// For fixed axes each codeword is chosen optimally (the direction of the
/// minimum-norm point of the convex hull of the signed axes), so the ascent
/// runs over 2n spherical angles. Starts are drawn on the `resolution` grid;
/// the step shrinks from a coarse multiple of `resolution` down to it, then
/// keeps halving below it to polish the final point.
RacSearchResult rac_search(size_t n, size_t m, double resolution, uint64_t seed, size_t starts = 64);

}  // namespace qadvice

#endif
