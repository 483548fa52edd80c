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

#include "qadvice/qustring.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "qadvice/config.h"

namespace qadvice {

namespace {

size_t log2_exact(size_t d) {
    if (d == 0 || (d & (d - 1)) != 0) {
        throw std::invalid_argument("Amplitude count " + std::to_string(d) + " is not a power of two.");
    }
    size_t n = 0;
    while ((size_t{1} << n) < d) {
        n++;
    }
    return n;
}

double norm_squared_of(const std::vector<Complex> &amps) {
    double t = 0;
    for (const auto &a : amps) {
        t += std::norm(a);
    }
    return t;
}

}  // namespace

Qustring Qustring::zero(size_t n) {
    return basis(n, 0);
}

Qustring Qustring::basis(size_t n, uint64_t index) {
    if (n >= 40) {
        throw std::invalid_argument("Qustring too large for dense storage.");
    }
    if (index >> n) {
        throw std::out_of_range("Basis index out of range.");
    }
    std::vector<Complex> amps(size_t{1} << n);
    amps[index] = 1;
    Qustring s(n, std::move(amps));
    s.uniform_support_ = 1;
    return s;
}

Qustring Qustring::from_amplitudes(std::vector<Complex> amplitudes) {
    size_t n = log2_exact(amplitudes.size());
    double ns = norm_squared_of(amplitudes);
    if (std::abs(ns - 1) > tolerances().normalization) {
        throw std::invalid_argument("Qustring amplitudes are not normalized (norm^2 = " + std::to_string(ns) + ").");
    }
    return Qustring(n, std::move(amplitudes));
}

Qustring Qustring::uniform(size_t n, std::span<const uint64_t> support) {
    if (support.empty()) {
        throw std::invalid_argument("Uniform superposition needs a nonempty support.");
    }
    if (n >= 40) {
        throw std::invalid_argument("Qustring too large for dense storage.");
    }
    std::vector<Complex> amps(size_t{1} << n);
    double a = 1.0 / std::sqrt((double)support.size());
    std::set<uint64_t> seen;
    for (auto k : support) {
        if (k >= amps.size()) {
            throw std::out_of_range("Support index out of range.");
        }
        if (!seen.insert(k).second) {
            throw std::invalid_argument("Duplicate support index.");
        }
        amps[k] = a;
    }
    Qustring s(n, std::move(amps));
    s.uniform_support_ = support.size();
    return s;
}

double Qustring::norm_squared() const {
    return norm_squared_of(amps_);
}

Qustring StateBuilder::finish(double tolerance) && {
    double ns = norm_squared_of(amps_);
    if (std::abs(ns - 1) > tolerance) {
        throw std::logic_error("State lost normalization (norm^2 = " + std::to_string(ns) + ").");
    }
    return Qustring(n_, std::move(amps_));
}

std::map<std::string, double> measure_probs(const Qustring &s, std::span<const size_t> qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("measure_probs needs at least one qubit.");
    }
    std::set<size_t> distinct;
    for (auto q : qubits) {
        if (q >= s.num_qubits()) {
            throw std::out_of_range("Measured qubit " + std::to_string(q) + " out of range.");
        }
        if (!distinct.insert(q).second) {
            throw std::invalid_argument("Measured qubit listed twice.");
        }
    }
    size_t n = s.num_qubits();
    std::map<std::string, double> out;
    std::string key(qubits.size(), '0');
    for (uint64_t k = 0; k < s.dimension(); k++) {
        double p = std::norm(s[k]);
        if (p == 0) {
            continue;
        }
        for (size_t j = 0; j < qubits.size(); j++) {
            key[j] = ((k >> (n - 1 - qubits[j])) & 1) ? '1' : '0';
        }
        out[key] += p;
    }
    return out;
}

double l2_distance(const Qustring &a, const Qustring &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("l2_distance on states of different qubit counts.");
    }
    double t = 0;
    for (size_t k = 0; k < a.dimension(); k++) {
        t += std::norm(a[k] - b[k]);
    }
    return std::sqrt(t);
}

Complex inner_product(const Qustring &a, const Qustring &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product on states of different qubit counts.");
    }
    Complex t = 0;
    for (size_t k = 0; k < a.dimension(); k++) {
        t += std::conj(a[k]) * b[k];
    }
    return t;
}

double l2_distance_up_to_phase(const Qustring &a, const Qustring &b) {
    double overlap = std::abs(inner_product(b, a));
    return std::sqrt(std::max(0.0, 2 - 2 * overlap));
}

}  // namespace qadvice
