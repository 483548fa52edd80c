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

#include "qadvice/fingerprint.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace qadvice {

Fingerprint::Fingerprint(BitString source, PrimeField field) : source_(std::move(source)), field_(field) {
    if (source_.size() == 0) {
        throw std::invalid_argument("Fingerprint of an empty string.");
    }
}

uint64_t Fingerprint::basis_index(uint64_t z) const {
    uint64_t v = field_.poly_eval(source_, field_.element(z)).value();
    return (z << register_width()) | v;
}

std::vector<uint64_t> Fingerprint::support() const {
    std::vector<uint64_t> out;
    out.reserve(field_.order());
    for (uint64_t z = 0; z < field_.order(); z++) {
        out.push_back(basis_index(z));
    }
    return out;
}

Qustring Fingerprint::state() const {
    if (num_qubits() > 24) {
        throw std::invalid_argument(
            "Fingerprint of " + std::to_string(num_qubits()) + " qubits is too large to materialize densely.");
    }
    auto s = support();
    return Qustring::uniform(num_qubits(), s);
}

Fingerprint make_fingerprint(const BitString &x, const Rational &epsilon) {
    if (epsilon <= 0 || epsilon > 1) {
        throw std::invalid_argument("make_fingerprint requires 0 < epsilon <= 1.");
    }
    if (x.size() == 0) {
        throw std::invalid_argument("make_fingerprint requires a nonempty string.");
    }
    BigInt bound = ceil(Rational(x.size()) / epsilon);
    if (bound > BigInt(uint64_t{1} << 40)) {
        throw std::invalid_argument("Fingerprint field would be too large.");
    }
    uint64_t q = least_prime_above(bound.convert_to<uint64_t>());
    return Fingerprint(x, PrimeField(q));
}

BitString FingerprintAdvice::prefix() const {
    BitString p(m() + 1);
    p.set(m(), true);
    return p;
}

size_t FingerprintAdvice::length_qubits() const {
    return (m() + 1) + m() * 2 * field.register_width();
}

Rational FingerprintAdvice::soundness_bound() const {
    if (n == 0) {
        return 0;
    }
    return Rational(BigInt(m() * (n - 1)), BigInt(field.order()));
}

std::string FingerprintAdvice::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["f"] = f;
    j["q"] = field.order();
    j["members"] = nlohmann::json::array();
    for (const auto &y : members) {
        j["members"].push_back(y.hex());
    }
    return j.dump();
}

FingerprintAdvice FingerprintAdvice::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("Advice JSON does not parse: ") + e.what());
    }
    for (const char *key : {"n", "f", "q", "members"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("Advice JSON missing '") + key + "'.");
        }
    }
    size_t n = j["n"].get<size_t>();
    size_t f = j["f"].get<size_t>();
    std::vector<BitString> members;
    for (const auto &h : j["members"]) {
        members.push_back(BitString::from_hex(h.get<std::string>(), n));
    }
    auto advice = build_advice(std::move(members), n, f);
    if (advice.field.order() != j["q"].get<uint64_t>()) {
        throw std::invalid_argument("Advice JSON field size disagrees with the one implied by n and f.");
    }
    return advice;
}

FingerprintAdvice build_advice(std::vector<BitString> members, size_t n, size_t f) {
    if (n == 0 || f == 0) {
        throw std::invalid_argument("build_advice requires n >= 1 and f >= 1.");
    }
    if (members.size() > 2 * f) {
        throw std::invalid_argument(
            "Advice budget exceeded: " + std::to_string(members.size()) + " members > 2f = " + std::to_string(2 * f));
    }
    std::set<BitString> seen;
    for (const auto &y : members) {
        if (y.size() != n) {
            throw std::invalid_argument("Member '" + y.str() + "' does not have length " + std::to_string(n) + ".");
        }
        if (!seen.insert(y).second) {
            throw std::invalid_argument("Duplicate member '" + y.str() + "'.");
        }
    }
    FingerprintAdvice advice;
    advice.n = n;
    advice.f = f;
    advice.field = PrimeField(least_prime_above(4 * advice.k()));
    advice.members = std::move(members);
    for (const auto &y : advice.members) {
        advice.fingerprints.emplace_back(y, advice.field);
    }
    if (advice.field.order() < 8 * n * f) {
        throw std::logic_error("Field smaller than 8nf.");
    }
    if (f <= n) {
        double ceiling = ADVICE_LENGTH_CONSTANT * (double)f * std::log2((double)n) + ADVICE_LENGTH_CONSTANT;
        if ((double)advice.length_qubits() > ceiling) {
            throw std::logic_error("Advice length exceeds c f log n + c.");
        }
    }
    return advice;
}

Rational acceptance_probability(const BitString &x, const FingerprintAdvice &advice) {
    if (x.size() != advice.n) {
        throw std::invalid_argument(
            "Input length " + std::to_string(x.size()) + " does not match advice length " + std::to_string(advice.n));
    }
    Rational reject = 1;
    Rational q(advice.field.order());
    for (const auto &y : advice.members) {
        Rational a(agreement_count(x, y, advice.field));
        reject *= (1 - a / q);
    }
    return 1 - reject;
}

MembershipResult membership_test(const BitString &x, const FingerprintAdvice &advice, std::mt19937_64 &rng) {
    MembershipResult result{false, acceptance_probability(x, advice)};
    std::uniform_int_distribution<uint64_t> measure_z(0, advice.field.order() - 1);
    for (const auto &fp : advice.fingerprints) {
        // Measuring the z register of a fingerprint is uniform over the field and
        // collapses the value register to p_y(z).
        auto z = advice.field.element(measure_z(rng));
        auto seen = advice.field.poly_eval(fp.source(), z);
        if (advice.field.poly_eval(x, z) == seen) {
            result.accept = true;
            break;
        }
    }
    return result;
}

double fingerprint_check_probability(const BitString &x, const Qustring &state, const PrimeField &field) {
    size_t w = field.register_width();
    if (state.num_qubits() != 2 * w) {
        throw std::invalid_argument("State width does not match the fingerprint layout for this field.");
    }
    uint64_t mask = (uint64_t{1} << w) - 1;
    double p = 0;
    for (uint64_t k = 0; k < state.dimension(); k++) {
        uint64_t z = k >> w;
        uint64_t v = k & mask;
        if (z < field.order() && field.poly_eval(x, field.element(z)).value() == v) {
            p += std::norm(state[k]);
        }
    }
    return p;
}

Qustring load_fingerprint_values(const BitString &y, const PrimeField &field, const Qustring &z_register) {
    size_t w = field.register_width();
    if (z_register.num_qubits() != w) {
        throw std::invalid_argument("z register width does not match the field.");
    }
    std::vector<Complex> amps(size_t{1} << (2 * w));
    for (uint64_t z = 0; z < z_register.dimension(); z++) {
        uint64_t v = z < field.order() ? field.poly_eval(y, field.element(z)).value() : 0;
        amps[(z << w) | v] += z_register[z];
    }
    return Qustring::from_amplitudes(std::move(amps));
}

}  // namespace qadvice
