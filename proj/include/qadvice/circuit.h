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

#ifndef QADVICE_CIRCUIT_H
#define QADVICE_CIRCUIT_H

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qadvice/qustring.h"

namespace qadvice {

/// The fixed universal set. Values double as codec opcodes.
enum class GateKind : uint8_t {
    H = 0x01,
    T = 0x02,
    T_DAG = 0x03,
    S = 0x04,
    S_DAG = 0x05,
    X = 0x06,
    CNOT = 0x07,
};

inline constexpr std::array<GateKind, 7> ALL_GATE_KINDS = {
    GateKind::H, GateKind::T, GateKind::T_DAG, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::CNOT};
inline constexpr std::array<GateKind, 6> SINGLE_QUBIT_GATE_KINDS = {
    GateKind::H, GateKind::T, GateKind::T_DAG, GateKind::S, GateKind::S_DAG, GateKind::X};

size_t arity(GateKind kind);
GateKind inverse(GateKind kind);
std::string_view name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

/// A gate application. For CNOT, qubits[0] is the control and qubits[1] the target.
struct Gate {
    GateKind kind;
    std::array<uint32_t, 2> qubits{0, 0};

    static Gate single(GateKind kind, uint32_t q);
    static Gate cnot(uint32_t control, uint32_t target);

    Gate inverse() const;
    bool operator==(const Gate &other) const = default;
};

class Circuit {
   public:
    explicit Circuit(size_t width = 1) : width_(width) {
    }

    size_t width() const {
        return width_;
    }
    /// Gate count.
    size_t size() const {
        return gates_.size();
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }

    /// Rejects out-of-range or repeated qubit indices.
    void append(const Gate &gate);
    void append(GateKind kind, uint32_t q) {
        append(Gate::single(kind, q));
    }
    void append_cnot(uint32_t control, uint32_t target) {
        append(Gate::cnot(control, target));
    }
    /// Appends `other`, relabeling its qubit j to `qubit_map[j]`.
    void append(const Circuit &other, std::span<const uint32_t> qubit_map);
    void append(const Circuit &other);

    /// Reversed gate order with every gate inverted.
    Circuit inverse() const;

    /// Removes adjacent inverse pairs (allowing disjoint gates in between) until none remain.
    Circuit simplified() const;

    /// Text format: a `width <n>` line followed by one gate per line, e.g. `CNOT 0 1`.
    std::string str() const;
    static Circuit from_text(std::string_view text);

    bool operator==(const Circuit &other) const = default;

   private:
    size_t width_;
    std::vector<Gate> gates_;
};

/// U(C)|s>.
Qustring apply(const Circuit &c, const Qustring &s);

class DecodeError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Code(C): magic 0x51, version 0x01, width byte, then a 3-byte record per gate:
/// opcode, first qubit, second qubit (0x00 padding for single-qubit gates).
struct CircuitCode {
    std::vector<uint8_t> bytes;
    bool operator==(const CircuitCode &other) const = default;
};

inline constexpr uint8_t CIRCUIT_CODE_MAGIC = 0x51;
inline constexpr uint8_t CIRCUIT_CODE_VERSION = 0x01;

CircuitCode encode_circuit(const Circuit &c);
/// Throws DecodeError on bad header, unknown opcode, truncated record, or index >= width.
Circuit decode_circuit(const CircuitCode &code);

}  // namespace qadvice

#endif
