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

#include "qadvice/circuit.h"

#include <cmath>
#include <optional>
#include <sstream>

#include "qadvice/config.h"

namespace qadvice {

namespace {

using Mat2 = std::array<Complex, 4>;

Mat2 single_qubit_matrix(GateKind kind) {
    const double r = 1 / std::sqrt(2.0);
    const Complex i(0, 1);
    switch (kind) {
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::T:
            return {1, 0, 0, std::polar(1.0, M_PI / 4)};
        case GateKind::T_DAG:
            return {1, 0, 0, std::polar(1.0, -M_PI / 4)};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::S_DAG:
            return {1, 0, 0, -i};
        case GateKind::X:
            return {0, 1, 1, 0};
        default:
            throw std::logic_error("Not a single-qubit gate.");
    }
}

}  // namespace

size_t arity(GateKind kind) {
    return kind == GateKind::CNOT ? 2 : 1;
}

GateKind inverse(GateKind kind) {
    switch (kind) {
        case GateKind::T:
            return GateKind::T_DAG;
        case GateKind::T_DAG:
            return GateKind::T;
        case GateKind::S:
            return GateKind::S_DAG;
        case GateKind::S_DAG:
            return GateKind::S;
        default:
            return kind;
    }
}

std::string_view name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::T:
            return "T";
        case GateKind::T_DAG:
            return "TDG";
        case GateKind::S:
            return "S";
        case GateKind::S_DAG:
            return "SDG";
        case GateKind::X:
            return "X";
        case GateKind::CNOT:
            return "CNOT";
    }
    throw std::logic_error("Unknown gate kind.");
}

GateKind gate_kind_from_name(std::string_view text) {
    for (auto k : ALL_GATE_KINDS) {
        if (name(k) == text) {
            return k;
        }
    }
    throw std::invalid_argument("Unknown gate name '" + std::string(text) + "'.");
}

Gate Gate::single(GateKind kind, uint32_t q) {
    if (arity(kind) != 1) {
        throw std::invalid_argument("Gate::single used with a two-qubit gate.");
    }
    return Gate{kind, {q, 0}};
}

Gate Gate::cnot(uint32_t control, uint32_t target) {
    return Gate{GateKind::CNOT, {control, target}};
}

Gate Gate::inverse() const {
    return Gate{qadvice::inverse(kind), qubits};
}

void Circuit::append(const Gate &gate) {
    size_t a = arity(gate.kind);
    for (size_t k = 0; k < a; k++) {
        if (gate.qubits[k] >= width_) {
            throw std::out_of_range(
                "Gate qubit " + std::to_string(gate.qubits[k]) + " outside circuit width " + std::to_string(width_));
        }
    }
    if (a == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw std::invalid_argument("CNOT control and target must differ.");
    }
    Gate g = gate;
    if (a == 1) {
        g.qubits[1] = 0;
    }
    gates_.push_back(g);
}

void Circuit::append(const Circuit &other, std::span<const uint32_t> qubit_map) {
    if (qubit_map.size() != other.width()) {
        throw std::invalid_argument("Qubit map size does not match sub-circuit width.");
    }
    for (const auto &g : other.gates()) {
        Gate mapped = g;
        for (size_t k = 0; k < arity(g.kind); k++) {
            mapped.qubits[k] = qubit_map[g.qubits[k]];
        }
        append(mapped);
    }
}

void Circuit::append(const Circuit &other) {
    if (other.width() > width_) {
        throw std::invalid_argument("Appended circuit is wider than the destination.");
    }
    for (const auto &g : other.gates()) {
        append(g);
    }
}

Circuit Circuit::inverse() const {
    Circuit out(width_);
    for (size_t k = gates_.size(); k-- > 0;) {
        out.gates_.push_back(gates_[k].inverse());
    }
    return out;
}

Circuit Circuit::simplified() const {
    std::vector<Gate> out;
    out.reserve(gates_.size());
    for (const auto &g : gates_) {
        size_t a = arity(g.kind);
        bool cancelled = false;
        for (size_t j = out.size(); j-- > 0;) {
            const auto &prev = out[j];
            bool touches = false;
            for (size_t u = 0; u < arity(prev.kind); u++) {
                for (size_t v = 0; v < a; v++) {
                    touches |= prev.qubits[u] == g.qubits[v];
                }
            }
            if (!touches) {
                continue;
            }
            if (prev == g.inverse()) {
                out.erase(out.begin() + (std::ptrdiff_t)j);
                cancelled = true;
            }
            break;
        }
        if (!cancelled) {
            out.push_back(g);
        }
    }
    Circuit result(width_);
    result.gates_ = std::move(out);
    return result;
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "width " << width_ << "\n";
    for (const auto &g : gates_) {
        out << name(g.kind) << " " << g.qubits[0];
        if (g.kind == GateKind::CNOT) {
            out << " " << g.qubits[1];
        }
        out << "\n";
    }
    return out.str();
}

Circuit Circuit::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Circuit> result;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        std::istringstream words(line);
        std::string head;
        if (!(words >> head)) {
            continue;
        }
        auto fail = [&](const std::string &why) {
            return std::invalid_argument("Circuit text line " + std::to_string(line_number) + ": " + why);
        };
        if (!result.has_value()) {
            size_t w;
            if (head != "width" || !(words >> w) || w == 0) {
                throw fail("expected 'width <n>' with n >= 1.");
            }
            result.emplace(w);
        } else {
            GateKind kind = gate_kind_from_name(head);
            std::array<uint32_t, 2> qs{0, 0};
            for (size_t k = 0; k < arity(kind); k++) {
                long long v;
                if (!(words >> v) || v < 0) {
                    throw fail("missing or negative qubit index.");
                }
                qs[k] = (uint32_t)v;
            }
            result->append(Gate{kind, qs});
        }
        std::string extra;
        if (words >> extra) {
            throw fail("unexpected trailing token '" + extra + "'.");
        }
    }
    if (!result.has_value()) {
        throw std::invalid_argument("Circuit text is missing its 'width' line.");
    }
    return *result;
}

Qustring apply(const Circuit &c, const Qustring &s) {
    if (s.num_qubits() != c.width()) {
        throw std::invalid_argument(
            "Circuit width " + std::to_string(c.width()) + " does not match state of " +
            std::to_string(s.num_qubits()) + " qubits.");
    }
    StateBuilder builder(s);
    auto &amps = builder.amplitudes();
    size_t n = c.width();
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::CNOT) {
            uint64_t cmask = uint64_t{1} << (n - 1 - g.qubits[0]);
            uint64_t tmask = uint64_t{1} << (n - 1 - g.qubits[1]);
            for (uint64_t k = 0; k < amps.size(); k++) {
                if ((k & cmask) && !(k & tmask)) {
                    std::swap(amps[k], amps[k | tmask]);
                }
            }
            continue;
        }
        Mat2 m = single_qubit_matrix(g.kind);
        uint64_t mask = uint64_t{1} << (n - 1 - g.qubits[0]);
        for (uint64_t k = 0; k < amps.size(); k++) {
            if (k & mask) {
                continue;
            }
            Complex a0 = amps[k];
            Complex a1 = amps[k | mask];
            amps[k] = m[0] * a0 + m[1] * a1;
            amps[k | mask] = m[2] * a0 + m[3] * a1;
        }
    }
    return std::move(builder).finish(tolerances().apply_norm);
}

CircuitCode encode_circuit(const Circuit &c) {
    if (c.width() > 255) {
        throw std::invalid_argument("Circuit codec supports widths up to 255.");
    }
    CircuitCode code;
    code.bytes.reserve(3 + 3 * c.size());
    code.bytes.push_back(CIRCUIT_CODE_MAGIC);
    code.bytes.push_back(CIRCUIT_CODE_VERSION);
    code.bytes.push_back((uint8_t)c.width());
    // Fixed 3-byte records; single-qubit gates pad the second index with 0x00.
    for (const auto &g : c.gates()) {
        code.bytes.push_back((uint8_t)g.kind);
        code.bytes.push_back((uint8_t)g.qubits[0]);
        code.bytes.push_back(arity(g.kind) == 2 ? (uint8_t)g.qubits[1] : 0);
    }
    return code;
}

Circuit decode_circuit(const CircuitCode &code) {
    const auto &b = code.bytes;
    if (b.size() < 3) {
        throw DecodeError("Circuit code shorter than its 3-byte header.");
    }
    if (b[0] != CIRCUIT_CODE_MAGIC) {
        throw DecodeError("Bad circuit code magic byte.");
    }
    if (b[1] != CIRCUIT_CODE_VERSION) {
        throw DecodeError("Unsupported circuit code version " + std::to_string(b[1]) + ".");
    }
    size_t width = b[2];
    if (width == 0) {
        throw DecodeError("Circuit code declares width 0.");
    }
    Circuit c(width);
    size_t pos = 3;
    while (pos < b.size()) {
        uint8_t op = b[pos++];
        if (op < (uint8_t)GateKind::H || op > (uint8_t)GateKind::CNOT) {
            throw DecodeError("Unknown opcode byte " + std::to_string(op) + " at offset " + std::to_string(pos - 1));
        }
        auto kind = (GateKind)op;
        size_t a = arity(kind);
        if (pos + 2 > b.size()) {
            throw DecodeError("Truncated gate record at end of circuit code.");
        }
        std::array<uint32_t, 2> qs{b[pos], b[pos + 1]};
        pos += 2;
        for (size_t k = 0; k < a; k++) {
            if (qs[k] >= width) {
                throw DecodeError("Qubit index " + std::to_string(qs[k]) + " >= width " + std::to_string(width));
            }
        }
        if (a == 1 && qs[1] != 0) {
            throw DecodeError("Nonzero padding byte in single-qubit gate record.");
        }
        if (a == 2 && qs[0] == qs[1]) {
            throw DecodeError("CNOT record with equal control and target.");
        }
        c.append(Gate{kind, qs});
    }
    return c;
}

}  // namespace qadvice
