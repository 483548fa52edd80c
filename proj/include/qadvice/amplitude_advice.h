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

#ifndef QADVICE_AMPLITUDE_ADVICE_H
#define QADVICE_AMPLITUDE_ADVICE_H

#include <cstdint>
#include <string>
#include <vector>

#include "qadvice/rational.h"
#include "qadvice/sk_net.h"

namespace qadvice {

/// A tally set truncated to N digits, folded into one rotation angle.
/// digits[n-1] = +1 iff 0^{2^n} is a member.
struct TallyTheta {
    std::vector<int8_t> digits;

    size_t horizon() const {
        return digits.size();
    }
    /// theta / 2pi = sum_n digits[n-1] / 8^n, exact.
    Rational turns() const;
    /// "+-+" style rendering.
    std::string str() const;
    static TallyTheta from_text(const std::string &text);
};

TallyTheta encode_theta(const std::vector<bool> &membership);

struct DecodeResult {
    double acceptance_probability = 0;
    bool decision = false;
    /// Fractional part of 8^{k-1} theta / 2pi.
    Rational frac;
};

/// Rotation decoder for digit k (1-based): probability of reading 1 after
/// |0> -> cos(a)|0> + sin(a)|1>, a = 2pi frac + pi/4.
DecodeResult decode_bit(const TallyTheta &theta, size_t k);

struct GatesetDecodeResult {
    double probability = 0;
    double exact_probability = 0;
    bool decision = false;
    size_t circuit_size = 0;
};

/// Same rotation, realized by sk_approximate within epsilon (0 < epsilon <= 1/6).
GatesetDecodeResult decode_via_gateset(
    const TallyTheta &theta, size_t k, double epsilon, const SkNet &net = SkNet::standard());

}  // namespace qadvice

#endif
