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

#include "qadvice/config.h"

#include <stdexcept>

namespace qadvice {

std::vector<std::pair<std::string, double>> Tolerances::table() const {
    return {
        {"normalization", normalization},
        {"gate_unitarity", gate_unitarity},
        {"apply_norm", apply_norm},
        {"probability_sum", probability_sum},
        {"operator_norm_relative", operator_norm_relative},
        {"basis_orthonormal", basis_orthonormal},
        {"target_unitarity", target_unitarity},
        {"sk_precision_floor", sk_precision_floor},
        {"state_precision_floor", state_precision_floor},
        {"unitary_precision_floor", unitary_precision_floor},
        {"exact_match", exact_match},
    };
}

namespace {

Tolerances &mutable_tolerances() {
    static Tolerances t{};
    return t;
}

}  // namespace

const Tolerances &tolerances() {
    return mutable_tolerances();
}

void override_tolerance(const std::string &name, double value) {
    if (!(value > 0)) {
        throw std::invalid_argument("Tolerance '" + name + "' must be positive.");
    }
    Tolerances &t = mutable_tolerances();
    std::pair<const char *, double *> fields[] = {
        {"normalization", &t.normalization},
        {"gate_unitarity", &t.gate_unitarity},
        {"apply_norm", &t.apply_norm},
        {"probability_sum", &t.probability_sum},
        {"operator_norm_relative", &t.operator_norm_relative},
        {"basis_orthonormal", &t.basis_orthonormal},
        {"target_unitarity", &t.target_unitarity},
        {"sk_precision_floor", &t.sk_precision_floor},
        {"state_precision_floor", &t.state_precision_floor},
        {"unitary_precision_floor", &t.unitary_precision_floor},
        {"exact_match", &t.exact_match},
    };
    for (auto &[key, ptr] : fields) {
        if (name == key) {
            *ptr = value;
            return;
        }
    }
    throw std::invalid_argument("Unknown tolerance '" + name + "'.");
}

void reset_tolerances() {
    mutable_tolerances() = Tolerances{};
}

}  // namespace qadvice
