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

#include "qadvice/amplitude_advice.h"

#include <cmath>
#include <stdexcept>

#include "qadvice/circuit.h"
#include "qadvice/qustring.h"
#include "qadvice/synthesis.h"

namespace qadvice {

Rational TallyTheta::turns() const {
    Rational total = 0;
    BigInt den = 1;
    for (auto h : digits) {
        den *= 8;
        total += Rational(BigInt(h), den);
    }
    return total;
}

std::string TallyTheta::str() const {
    std::string out;
    for (auto h : digits) {
        out.push_back(h > 0 ? '+' : '-');
    }
    return out;
}

TallyTheta TallyTheta::from_text(const std::string &text) {
    TallyTheta t;
    for (char c : text) {
        if (c == '+') {
            t.digits.push_back(1);
        } else if (c == '-') {
            t.digits.push_back(-1);
        } else {
            throw std::invalid_argument("Digit pattern may only contain '+' and '-', got '" + text + "'.");
        }
    }
    if (t.digits.empty()) {
        throw std::invalid_argument("Digit pattern is empty.");
    }
    return t;
}

TallyTheta encode_theta(const std::vector<bool> &membership) {
    if (membership.empty()) {
        throw std::invalid_argument("encode_theta needs at least one digit.");
    }
    TallyTheta t;
    for (bool m : membership) {
        t.digits.push_back(m ? 1 : -1);
    }
    return t;
}

namespace {

Rational digit_frac(const TallyTheta &theta, size_t k) {
    if (k < 1 || k > theta.horizon()) {
        throw std::out_of_range(
            "Digit index " + std::to_string(k) + " outside 1.." + std::to_string(theta.horizon()) + ".");
    }
    BigInt scale = 1;
    for (size_t i = 1; i < k; i++) {
        scale *= 8;
    }
    return fractional_part(Rational(scale) * theta.turns());
}

double rotation_angle(const Rational &frac) {
    return 2 * M_PI * to_double(frac) + M_PI / 4;
}

}  // namespace

DecodeResult decode_bit(const TallyTheta &theta, size_t k) {
    DecodeResult r;
    r.frac = digit_frac(theta, k);
    double s = std::sin(rotation_angle(r.frac));
    r.acceptance_probability = s * s;
    r.decision = r.acceptance_probability >= 0.5;
    return r;
}

GatesetDecodeResult decode_via_gateset(const TallyTheta &theta, size_t k, double epsilon, const SkNet &net) {
    if (!(epsilon <= 1.0 / 6)) {
        throw std::invalid_argument("decode_via_gateset needs epsilon <= 1/6.");
    }
    auto exact = decode_bit(theta, k);
    Circuit c = sk_approximate(ry(2 * rotation_angle(exact.frac)), epsilon, net);
    auto out = apply(c, Qustring::zero(1));
    GatesetDecodeResult r;
    r.probability = std::norm(out[1]);
    r.exact_probability = exact.acceptance_probability;
    r.decision = r.probability >= 0.5;
    r.circuit_size = c.size();
    if (std::abs(r.probability - r.exact_probability) > 2 * epsilon) {
        throw std::logic_error("Gate-set decoder drifted more than 2 epsilon from the exact probability.");
    }
    return r;
}

}  // namespace qadvice
