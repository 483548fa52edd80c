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

#include "qadvice/bit_string.h"

#include <stdexcept>

namespace qadvice {

BitString::BitString(size_t n) : bits_(n, 0) {
}

BitString::BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("BitString entries must be 0 or 1.");
        }
    }
}

BitString BitString::from_text(std::string_view text) {
    BitString result(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            result.bits_[i] = 1;
        } else if (text[i] != '0') {
            throw std::invalid_argument("Not a bit string: '" + std::string(text) + "'");
        }
    }
    return result;
}

BitString BitString::from_hex(std::string_view hex, size_t n) {
    if (hex.size() != (n + 3) / 4) {
        throw std::invalid_argument(
            "Hex string '" + std::string(hex) + "' has the wrong number of digits for " + std::to_string(n) +
            " bits.");
    }
    BitString result(n);
    for (size_t d = 0; d < hex.size(); d++) {
        char c = hex[d];
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw std::invalid_argument("Not a hex digit: '" + std::string(1, c) + "'");
        }
        for (size_t b = 0; b < 4; b++) {
            size_t pos = d * 4 + b;
            bool bit = (v >> (3 - b)) & 1;
            if (pos < n) {
                result.bits_[pos] = bit;
            } else if (bit) {
                throw std::invalid_argument("Nonzero padding bits in hex string '" + std::string(hex) + "'.");
            }
        }
    }
    return result;
}

BitString BitString::from_index(uint64_t value, size_t n) {
    if (n < 64 && (value >> n) != 0) {
        throw std::invalid_argument("Index does not fit in the requested length.");
    }
    BitString result(n);
    for (size_t i = 0; i < n && i < 64; i++) {
        result.bits_[n - 1 - i] = (value >> i) & 1;
    }
    return result;
}

BitString BitString::random(size_t n, std::mt19937_64 &rng) {
    BitString result(n);
    for (size_t i = 0; i < n; i++) {
        result.bits_[i] = rng() & 1;
    }
    return result;
}

std::string BitString::str() const {
    std::string out(bits_.size(), '0');
    for (size_t i = 0; i < bits_.size(); i++) {
        if (bits_[i]) {
            out[i] = '1';
        }
    }
    return out;
}

std::string BitString::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (size_t d = 0; d * 4 < bits_.size(); d++) {
        int v = 0;
        for (size_t b = 0; b < 4; b++) {
            size_t pos = d * 4 + b;
            v = (v << 1) | (pos < bits_.size() ? bits_[pos] : 0);
        }
        out.push_back(digits[v]);
    }
    return out;
}

uint64_t BitString::index() const {
    if (bits_.size() > 64) {
        throw std::out_of_range("BitString longer than 64 bits has no integer index.");
    }
    uint64_t v = 0;
    for (auto b : bits_) {
        v = (v << 1) | b;
    }
    return v;
}

bool BitString::is_zero() const {
    for (auto b : bits_) {
        if (b) {
            return false;
        }
    }
    return true;
}

}  // namespace qadvice
