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

#ifndef QADVICE_SK_NET_H
#define QADVICE_SK_NET_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qadvice/circuit.h"
#include "qadvice/linalg.h"

namespace qadvice {

/// Unit quaternion for the SU(2) element w I - i (x X + y Y + z Z).
///
/// Quaternion products match matrix products, and q and -q name the same
/// operator up to global phase.
struct Quaternion {
    double w = 1, x = 0, y = 0, z = 0;

    Quaternion operator*(const Quaternion &o) const;
    Quaternion conjugate() const {
        return {w, -x, -y, -z};
    }
    double dot(const Quaternion &o) const {
        return w * o.w + x * o.x + y * o.y + z * o.z;
    }
    Quaternion normalized() const;

    /// Rotation by `angle` about the unit axis (ax, ay, az).
    static Quaternion rotation(double angle, double ax, double ay, double az);
    /// Projects a 2x2 unitary onto SU(2) by dividing out sqrt(det).
    static Quaternion from_unitary(const Matrix &u);
    Matrix to_matrix() const;
};

/// min over phi of || U(a) - e^{i phi} U(b) ||, in closed form: sqrt(2 (1 - |a.b|)).
double phase_distance(const Quaternion &a, const Quaternion &b);

/// Quaternion of a word of single-qubit gates applied left to right in time.
Quaternion word_quaternion(const std::vector<GateKind> &word);

/// Every distinct single-qubit operator (up to phase) reachable by words of at
/// most `max_length` gates over {H, T, T^dag, S, S^dag, X}, each stored with a
/// shortest word reaching it.
class SkNet {
   public:
    struct Entry {
        Quaternion q;
        std::vector<GateKind> word;
    };

    static SkNet build(size_t max_length);

    /// Net with word length 16, loaded from or written to the file named by
    /// QADVICE_NET_CACHE when that variable is set, built in memory otherwise.
    static const SkNet &standard();

    size_t max_length() const {
        return max_length_;
    }
    size_t size() const {
        return entries_.size();
    }
    const std::vector<Entry> &entries() const {
        return entries_;
    }
    /// Empirical covering radius measured on seeded Haar samples at build time.
    double epsilon0() const {
        return epsilon0_;
    }

    const Entry &nearest(const Quaternion &target) const;

    /// Versioned binary: "QNET", u32 version, u32 max length, f64 epsilon0,
    /// u64 count, then per entry a length byte and opcode bytes.
    void save(const std::string &path) const;
    /// Returns nothing when the file is missing, malformed, or of another version.
    static std::optional<SkNet> load(const std::string &path);

   private:
    void index();
    void measure_epsilon0();
    size_t max_length_ = 0;
    double epsilon0_ = 0;
    std::vector<Entry> entries_;
    std::vector<uint32_t> cell_start_;
    std::vector<uint32_t> cell_items_;
};

inline constexpr size_t STANDARD_NET_LENGTH = 16;
inline constexpr uint32_t NET_CACHE_VERSION = 1;

}  // namespace qadvice

#endif
