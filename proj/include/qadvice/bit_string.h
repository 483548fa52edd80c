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

#ifndef QADVICE_BIT_STRING_H
#define QADVICE_BIT_STRING_H

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qadvice {

/// A classical string x = x_1 x_2 ... x_n over {0,1}.
///
/// Position 0 holds x_1. Text form is the characters x_1..x_n left to right.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t n);
    explicit BitString(std::vector<uint8_t> bits);

    static BitString from_text(std::string_view text);
    /// Hex digits carry bits x_1.. four at a time, most significant bit first.
    /// The final digit is zero-padded on its low end; `n` selects how many bits are kept.
    static BitString from_hex(std::string_view hex, size_t n);
    /// Bit i of `value` (least significant first) becomes x_{n-i}, so that
    /// from_index(k, n) is the k-th string of length n in lexicographic order.
    static BitString from_index(uint64_t value, size_t n);
    static BitString random(size_t n, std::mt19937_64 &rng);

    size_t size() const {
        return bits_.size();
    }
    bool operator[](size_t i) const {
        return bits_[i] != 0;
    }
    void set(size_t i, bool v) {
        bits_[i] = v ? 1 : 0;
    }

    std::string str() const;
    std::string hex() const;
    /// Inverse of from_index. Requires size() <= 64.
    uint64_t index() const;
    bool is_zero() const;

    bool operator==(const BitString &other) const = default;
    auto operator<=>(const BitString &other) const = default;

   private:
    std::vector<uint8_t> bits_;
};

}  // namespace qadvice

#endif
