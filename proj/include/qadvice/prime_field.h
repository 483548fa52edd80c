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

#ifndef QADVICE_PRIME_FIELD_H
#define QADVICE_PRIME_FIELD_H

#include <cstdint>

#include "qadvice/bit_string.h"

namespace qadvice {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(uint64_t n);

/// Least prime q with m < q. Bertrand's postulate gives q <= 2m.
uint64_t least_prime_above(uint64_t m);

class PrimeField;

/// A value in [0, q) tagged with the modulus of the field it belongs to.
class FieldElement {
   public:
    uint64_t value() const {
        return value_;
    }
    uint64_t modulus() const {
        return modulus_;
    }
    bool operator==(const FieldElement &other) const = default;

   private:
    friend class PrimeField;
    FieldElement(uint64_t value, uint64_t modulus) : value_(value), modulus_(modulus) {
    }
    uint64_t value_;
    uint64_t modulus_;
};

/// GF(q) for a prime q (checked on construction).
class PrimeField {
   public:
    explicit PrimeField(uint64_t q);

    uint64_t order() const {
        return q_;
    }
    /// Number of qubits needed to hold one field element: ceil(log2 q).
    size_t register_width() const;

    FieldElement element(uint64_t v) const;
    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement mul(FieldElement a, FieldElement b) const;

    /// p_x(z) = sum_i x_i z^(i-1), by Horner's rule.
    FieldElement poly_eval(const BitString &x, FieldElement z) const;

    bool operator==(const PrimeField &other) const = default;

   private:
    void check(FieldElement a) const;
    uint64_t q_;
};

/// Number of z in GF(q) with p_x(z) = p_y(z), by enumerating every z.
uint64_t agreement_count(const BitString &x, const BitString &y, const PrimeField &field);

}  // namespace qadvice

#endif
