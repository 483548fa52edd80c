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

#include "qadvice/rational.h"

#include <random>

#include "gtest/gtest.h"

#include "qadvice/bit_string.h"

using namespace qadvice;

TEST(rational, parse_forms) {
    EXPECT_EQ(parse_rational("2/3"), Rational(2, 3));
    EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("+.5"), Rational(1, 2));
}

TEST(rational, parse_rejects_garbage) {
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1//2"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1e3"), std::invalid_argument);
}

TEST(rational, to_string_and_double) {
    EXPECT_EQ(to_string(Rational(20, 27)), "20/27");
    EXPECT_EQ(to_string(Rational(-6, 3)), "-2");
    EXPECT_DOUBLE_EQ(to_double(Rational(1, 8)), 0.125);
}

TEST(rational, ceil_matches_integer_division) {
    for (int num = -50; num <= 50; num++) {
        for (int den = 1; den <= 9; den++) {
            int expected = num >= 0 ? (num + den - 1) / den : -((-num) / den);
            ASSERT_EQ(ceil(Rational(num, den)), BigInt(expected)) << num << "/" << den;
        }
    }
}

TEST(rational, fractional_part_in_unit_interval) {
    EXPECT_EQ(fractional_part(Rational(7, 3)), Rational(1, 3));
    EXPECT_EQ(fractional_part(Rational(-1, 3)), Rational(2, 3));
    EXPECT_EQ(fractional_part(Rational(-4)), Rational(0));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 1000; k++) {
        Rational r(BigInt((int64_t)(rng() % 100000) - 50000), BigInt(rng() % 997 + 1));
        Rational f = fractional_part(r);
        ASSERT_GE(f, 0);
        ASSERT_LT(f, 1);
        Rational whole = r - f;
        ASSERT_EQ(boost::multiprecision::denominator(whole), 1);
    }
}

TEST(bit_string, text_round_trip) {
    auto x = BitString::from_text("100110");
    EXPECT_EQ(x.size(), 6u);
    EXPECT_TRUE(x[0]);
    EXPECT_FALSE(x[1]);
    EXPECT_EQ(x.str(), "100110");
    EXPECT_THROW(BitString::from_text("10a"), std::invalid_argument);
    EXPECT_TRUE(BitString::from_text("0000").is_zero());
}

TEST(bit_string, index_is_lexicographic_rank) {
    EXPECT_EQ(BitString::from_text("000").index(), 0u);
    EXPECT_EQ(BitString::from_text("001").index(), 1u);
    EXPECT_EQ(BitString::from_text("100").index(), 4u);
    for (uint64_t v = 0; v < 256; v++) {
        auto x = BitString::from_index(v, 8);
        ASSERT_EQ(x.index(), v);
        if (v > 0) {
            ASSERT_LT(BitString::from_index(v - 1, 8), x);
        }
    }
    EXPECT_THROW(BitString::from_index(8, 3), std::invalid_argument);
}

TEST(bit_string, hex_packs_leading_bits_first) {
    EXPECT_EQ(BitString::from_text("1000").hex(), "8");
    EXPECT_EQ(BitString::from_text("10").hex(), "8");
    EXPECT_EQ(BitString::from_text("0001").hex(), "1");
    EXPECT_EQ(BitString::from_text("111100001").hex(), "f08");
    EXPECT_EQ(BitString::from_hex("f08", 9), BitString::from_text("111100001"));
    EXPECT_THROW(BitString::from_hex("f09", 9), std::invalid_argument);
    EXPECT_THROW(BitString::from_hex("f0", 9), std::invalid_argument);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 500; k++) {
        auto x = BitString::random(rng() % 70 + 1, rng);
        ASSERT_EQ(BitString::from_hex(x.hex(), x.size()), x);
    }
}
