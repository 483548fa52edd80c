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

#include "qadvice/prime_field.h"

#include <stdexcept>
#include <string>

namespace qadvice {

namespace {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    // This witness set is deterministic for all n < 2^64.
    static constexpr uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (uint64_t p : witnesses) {
        if (n % p == 0) {
            return n == p;
        }
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    for (uint64_t a : witnesses) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; r++) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

uint64_t least_prime_above(uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("least_prime_above requires m >= 1.");
    }
    if (m >= UINT64_MAX - 1000) {
        throw std::out_of_range("least_prime_above: m too large for 64-bit search.");
    }
    uint64_t q = m + 1;
    while (!is_prime(q)) {
        q++;
    }
    return q;
}

PrimeField::PrimeField(uint64_t q) : q_(q) {
    if (!is_prime(q)) {
        throw std::invalid_argument("PrimeField modulus " + std::to_string(q) + " is not prime.");
    }
}

size_t PrimeField::register_width() const {
    size_t w = 0;
    while ((uint64_t{1} << w) < q_) {
        w++;
    }
    return w;
}

FieldElement PrimeField::element(uint64_t v) const {
    return FieldElement(v % q_, q_);
}

void PrimeField::check(FieldElement a) const {
    if (a.modulus_ != q_) {
        throw std::invalid_argument(
            "Element of GF(" + std::to_string(a.modulus_) + ") used with GF(" + std::to_string(q_) + ").");
    }
}

FieldElement PrimeField::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    uint64_t s = a.value_ + b.value_;
    if (s >= q_ || s < a.value_) {
        s -= q_;
    }
    return FieldElement(s, q_);
}

FieldElement PrimeField::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return FieldElement(mul_mod(a.value_, b.value_, q_), q_);
}

FieldElement PrimeField::poly_eval(const BitString &x, FieldElement z) const {
    check(z);
    if (x.size() == 0) {
        throw std::invalid_argument("poly_eval requires a nonempty bit string.");
    }
    // Horner from the highest coefficient x_n down to x_1.
    uint64_t acc = 0;
    for (size_t i = x.size(); i-- > 0;) {
        acc = mul_mod(acc, z.value_, q_);
        if (x[i]) {
            acc += 1;
            if (acc == q_) {
                acc = 0;
            }
        }
    }
    return FieldElement(acc, q_);
}

uint64_t agreement_count(const BitString &x, const BitString &y, const PrimeField &field) {
    if (x.size() != y.size()) {
        throw std::invalid_argument(
            "agreement_count length mismatch: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    if (field.order() < x.size()) {
        throw std::invalid_argument("agreement_count requires q >= n.");
    }
    uint64_t count = 0;
    for (uint64_t z = 0; z < field.order(); z++) {
        auto e = field.element(z);
        if (field.poly_eval(x, e) == field.poly_eval(y, e)) {
            count++;
        }
    }
    return count;
}

}  // namespace qadvice
