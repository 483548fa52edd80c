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

#include "qadvice/amplitude_advice.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace qadvice;

namespace {

/// Reference decoder in plain long double: shift the digit series directly.
long double oracle_probability(const std::vector<int8_t> &digits, size_t k) {
    long double tail = 0;
    long double scale = 1.0L / 8;
    for (size_t j = k; j <= digits.size(); j++) {
        tail += digits[j - 1] * scale;
        scale /= 8;
    }
    // The digits before k contribute whole turns after scaling by 8^{k-1}.
    long double s = std::sin(2 * M_PIl * tail + M_PIl / 4);
    return s * s;
}

TallyTheta random_theta(std::mt19937_64 &rng, size_t n) {
    std::vector<bool> m(n);
    for (size_t i = 0; i < n; i++) {
        m[i] = rng() & 1;
    }
    return encode_theta(m);
}

}  // namespace

TEST(amplitude_advice, turns_examples) {
    EXPECT_EQ(encode_theta({true, true, true}).turns(), parse_rational("73/512"));
    EXPECT_EQ(encode_theta({false, false, false}).turns(), parse_rational("-73/512"));
    EXPECT_EQ(encode_theta({true, false}).turns(), parse_rational("7/64"));
    EXPECT_EQ(TallyTheta::from_text("+-").turns(), parse_rational("7/64"));
    EXPECT_EQ(encode_theta({true, false, true}).str(), "+-+");
    EXPECT_THROW(encode_theta({}), std::invalid_argument);
    EXPECT_THROW(TallyTheta::from_text("+x"), std::invalid_argument);
}

TEST(amplitude_advice, turns_sign_symmetry) {
    std::mt19937_64 rng(5);
    for (size_t trial = 0; trial < 100; trial++) {
        auto t = random_theta(rng, 1 + trial % 20);
        TallyTheta neg = t;
        for (auto &d : neg.digits) {
            d = (int8_t)-d;
        }
        EXPECT_EQ(neg.turns(), -t.turns());
    }
}

TEST(amplitude_advice, all_members_first_digit) {
    std::vector<bool> all(10, true);
    auto r = decode_bit(encode_theta(all), 1);
    double expected = std::pow(std::sin(2 * M_PI / 7 + M_PI / 4), 2);
    EXPECT_NEAR(expected, 0.987464, 1e-6);
    EXPECT_NEAR(r.acceptance_probability, expected, 1e-6);
    EXPECT_TRUE(r.decision);
}

TEST(amplitude_advice, worst_case_tail_margin) {
    // +1 followed by all -1 digits is the least favourable accepting pattern.
    for (size_t n = 2; n <= 14; n++) {
        std::vector<bool> m(n, false);
        m[0] = true;
        auto r = decode_bit(encode_theta(m), 1);
        EXPECT_GE(r.acceptance_probability, std::pow(std::cos(2 * M_PI / 56), 2) - 1e-12);
        EXPECT_GE(r.acceptance_probability, 2.0 / 3);
    }
}

TEST(amplitude_advice, frac_is_shifted_tail) {
    auto t = TallyTheta::from_text("+-+");
    EXPECT_EQ(decode_bit(t, 1).frac, parse_rational("73/512") - 2 * parse_rational("1/64"));
    EXPECT_EQ(decode_bit(t, 3).frac, parse_rational("1/8"));
    EXPECT_EQ(decode_bit(t, 2).frac, fractional_part(parse_rational("-1/8") + parse_rational("1/64")));
}

TEST(amplitude_advice, decodes_random_patterns) {
    std::mt19937_64 rng(2026);
    for (size_t trial = 0; trial < 200; trial++) {
        auto t = random_theta(rng, 12);
        for (size_t k = 1; k <= 11; k++) {
            auto r = decode_bit(t, k);
            bool member = t.digits[k - 1] > 0;
            ASSERT_EQ(r.decision, member) << t.str() << " k=" << k;
            if (member) {
                ASSERT_GE(r.acceptance_probability, 0.987);
                ASSERT_LE(r.acceptance_probability, 1.0);
            } else {
                ASSERT_LE(r.acceptance_probability, 0.013);
                ASSERT_GE(r.acceptance_probability, 0.0);
            }
            ASSERT_NEAR(r.acceptance_probability, (double)oracle_probability(t.digits, k), 1e-12);
        }
    }
}

TEST(amplitude_advice, index_range) {
    auto t = TallyTheta::from_text("+-+");
    EXPECT_THROW(decode_bit(t, 0), std::out_of_range);
    EXPECT_NO_THROW(decode_bit(t, 3));
    EXPECT_THROW(decode_bit(t, 4), std::out_of_range);
}

TEST(amplitude_advice, gateset_example) {
    std::vector<bool> all(10, true);
    auto r = decode_via_gateset(encode_theta(all), 1, 0.01);
    EXPECT_NEAR(r.probability, 0.98746, 0.02);
    EXPECT_TRUE(r.decision);
    EXPECT_GT(r.circuit_size, 0u);
}

TEST(amplitude_advice, gateset_random_patterns) {
    std::mt19937_64 rng(77);
    for (size_t trial = 0; trial < 10; trial++) {
        auto t = random_theta(rng, 8);
        size_t k = 1 + trial % 7;
        auto r = decode_via_gateset(t, k, 1.0 / 6);
        EXPECT_EQ(r.decision, t.digits[k - 1] > 0);
        EXPECT_NEAR(r.exact_probability, decode_bit(t, k).acceptance_probability, 1e-15);
    }
}

TEST(amplitude_advice, gateset_precision_errors) {
    auto t = TallyTheta::from_text("++");
    EXPECT_THROW(decode_via_gateset(t, 1, 0.2), std::invalid_argument);
    EXPECT_ANY_THROW(decode_via_gateset(t, 1, 0));
}
