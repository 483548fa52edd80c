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

#ifndef QADVICE_CONFIG_H
#define QADVICE_CONFIG_H

#include <string>
#include <utility>
#include <vector>

namespace qadvice {

/// Every numeric tolerance used by the library, in one place.
///
/// Reports emitted by the CLI embed this table so that printed numbers can be
/// audited without the source.
struct Tolerances {
    /// Allowed deviation of sum |a_i|^2 from 1 for float-backed qustrings.
    double normalization = 1e-10;
    /// ||U^dag U - I|| bound for the fixed gate matrices.
    double gate_unitarity = 1e-12;
    /// Norm drift allowed after applying a circuit.
    double apply_norm = 1e-9;
    /// Allowed deviation of a marginal distribution's total mass from 1.
    double probability_sum = 1e-9;
    /// Relative accuracy target of operator_norm.
    double operator_norm_relative = 1e-8;
    /// Orthonormality slack for measurement bases.
    double basis_orthonormal = 1e-9;
    /// Unitarity slack accepted for synthesis targets.
    double target_unitarity = 1e-9;
    /// Smallest epsilon sk_approximate will attempt.
    double sk_precision_floor = 1e-6;
    /// Smallest epsilon synthesize_state will attempt.
    double state_precision_floor = 1e-3;
    /// Smallest epsilon synthesize_unitary will attempt.
    double unitary_precision_floor = 1e-2;
    /// Distance under which two operators or states count as exactly equal.
    double exact_match = 1e-12;

    std::vector<std::pair<std::string, double>> table() const;
};

const Tolerances &tolerances();

/// Replaces one named entry of the process-wide table. Throws std::invalid_argument
/// for unknown names or non-positive values.
void override_tolerance(const std::string &name, double value);

/// Restores every entry to its default.
void reset_tolerances();

}  // namespace qadvice

#endif
