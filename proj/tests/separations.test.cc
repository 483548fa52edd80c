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

#include "qadvice/separations.h"

#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace qadvice;

namespace {

BigInt oracle_binomial(uint64_t n, uint64_t k) {
    BigInt r = 1;
    for (uint64_t i = 0; i < k; i++) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

AdvisedClassifier constant_classifier(uint64_t id, size_t n, size_t advice_len, double p) {
    AdvisedClassifier c{id, n, advice_len, {}};
    c.table.assign(uint64_t{1} << (n + advice_len), p);
    return c;
}

/// Accepts x exactly when bit x of the advice is set.
AdvisedClassifier echo_classifier(size_t n) {
    AdvisedClassifier c{7, n, size_t{1} << n, {}};
    for (uint64_t s = 0; s < (uint64_t{1} << c.advice_len); s++) {
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            c.table.push_back((s >> x) & 1 ? 1.0 : 0.0);
        }
    }
    return c;
}

AdvisedClassifier random_classifier(uint64_t id, size_t n, size_t advice_len, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 1);
    AdvisedClassifier c{id, n, advice_len, {}};
    for (uint64_t k = 0; k < (uint64_t{1} << (n + advice_len)); k++) {
        c.table.push_back(u(rng));
    }
    return c;
}

/// Second pass: no (classifier, advice) pair decides the set with probability >= 2/3 on every input.
bool oracle_escapes(const InputSet &set, const std::vector<AdvisedClassifier> &cs) {
    std::set<uint64_t> members(set.begin(), set.end());
    for (const auto &c : cs) {
        for (uint64_t s = 0; s < (uint64_t{1} << c.advice_len); s++) {
            bool decides = true;
            for (uint64_t x = 0; x < (uint64_t{1} << c.n); x++) {
                double correct = members.count(x) ? c.table[(s << c.n) + x] : 1 - c.table[(s << c.n) + x];
                decides &= correct >= 2.0 / 3;
            }
            if (decides) {
                return false;
            }
        }
    }
    return true;
}

Rational oracle_majority(const Rational &p, uint64_t t) {
    Rational total = 0;
    for (uint64_t j = t / 2 + 1; j <= t; j++) {
        Rational term = Rational(oracle_binomial(t, j));
        for (uint64_t i = 0; i < j; i++) {
            term *= p;
        }
        for (uint64_t i = 0; i < t - j; i++) {
            term *= 1 - p;
        }
        total += term;
    }
    return total;
}

}  // namespace

TEST(separations, counting_examples) {
    auto a = counting_inequality(4, 1);
    EXPECT_EQ(a.lhs, 137);
    EXPECT_EQ(a.rhs, 16);
    EXPECT_TRUE(a.holds);
    auto b = counting_inequality(1, 1);
    EXPECT_EQ(b.lhs, 4);
    EXPECT_EQ(b.rhs, 2);
    EXPECT_TRUE(b.holds);
    auto c = counting_inequality(2, 2);
    EXPECT_EQ(c.lhs, 16);
    EXPECT_EQ(c.rhs, 16);
    EXPECT_FALSE(c.holds);
    EXPECT_THROW(counting_inequality(2, 3), std::invalid_argument);
    EXPECT_THROW(counting_inequality(3, 0), std::invalid_argument);
}

TEST(separations, counting_matches_direct_evaluation) {
    for (size_t n = 1; n <= 12; n++) {
        for (size_t f = 1; f <= 4 && 2 * f <= (size_t{1} << n); f++) {
            auto r = counting_inequality(n, f);
            BigInt lhs = 0;
            for (uint64_t j = 0; j <= 2 * f; j++) {
                lhs += oracle_binomial(uint64_t{1} << n, j);
            }
            EXPECT_EQ(r.lhs, lhs);
            EXPECT_EQ(r.rhs, BigInt(1) << (f * n));
            EXPECT_EQ(r.holds, lhs > r.rhs);
            if (r.sufficient_condition) {
                EXPECT_GT(Rational(r.lhs), r.intermediate) << n << " " << f;
                EXPECT_GT(r.intermediate, Rational(r.rhs)) << n << " " << f;
                EXPECT_TRUE(r.holds);
            }
        }
    }
}

TEST(separations, realized_sets_examples) {
    auto ignore = constant_classifier(1, 3, 2, 0.9);
    auto fam = realized_sets(ignore);
    ASSERT_EQ(fam.sets.size(), 1u);
    EXPECT_EQ(fam.sets[0], (InputSet{0, 1, 2, 3, 4, 5, 6, 7}));
    EXPECT_EQ(fam.classifier_id, 1u);

    auto echo = realized_sets(echo_classifier(2));
    EXPECT_EQ(echo.sets.size(), 16u);

    std::mt19937_64 rng(3);
    auto rand = realized_sets(random_classifier(2, 3, 3, rng));
    EXPECT_LE(rand.sets.size(), 8u);
}

TEST(separations, realized_sets_threshold_boundary) {
    AdvisedClassifier c{1, 1, 0, {2.0 / 3, 0.66}};
    auto fam = realized_sets(c);
    ASSERT_EQ(fam.sets.size(), 1u);
    EXPECT_EQ(fam.sets[0], InputSet{0});
}

TEST(separations, classifier_validation) {
    AdvisedClassifier short_table{1, 2, 1, {0.5, 0.5}};
    EXPECT_THROW(short_table.validate(), std::invalid_argument);
    AdvisedClassifier bad{1, 1, 0, {0.5, 1.5}};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    auto huge = constant_classifier(1, 1, 0, 0.5);
    huge.advice_len = 30;
    EXPECT_THROW(realized_sets(huge), std::invalid_argument);
}

TEST(separations, classifier_json_round_trip) {
    std::mt19937_64 rng(4);
    auto c = random_classifier(9, 2, 2, rng);
    auto back = AdvisedClassifier::from_json(c.to_json());
    EXPECT_EQ(back.id, 9u);
    EXPECT_EQ(back.table, c.table);
    auto j = nlohmann::json::parse(R"({"id": 3, "n": 1, "advice_len": 1, "table": [["2/3", 0], [1, "1/3"]]})");
    auto parsed = AdvisedClassifier::from_json(j);
    EXPECT_DOUBLE_EQ(parsed.acceptance(0, 0), 2.0 / 3);
    EXPECT_DOUBLE_EQ(parsed.acceptance(1, 1), 1.0 / 3);
    j["table"][0].push_back(0.5);
    EXPECT_THROW(AdvisedClassifier::from_json(j), std::invalid_argument);
}

TEST(separations, diagonal_examples) {
    auto r = diagonal_sparse_set({constant_classifier(1, 2, 1, 0)}, 2, 1);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.set, InputSet{0});
    EXPECT_EQ(r.candidates_examined, 2u);
    EXPECT_TRUE(oracle_escapes(r.set, {constant_classifier(1, 2, 1, 0)}));

    auto all = diagonal_sparse_set({echo_classifier(2)}, 2, 1);
    EXPECT_FALSE(all.found);
    EXPECT_FALSE(all.premise_holds);
}

TEST(separations, diagonal_random_families) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; trial++) {
        std::vector<AdvisedClassifier> cs;
        for (uint64_t id = 0; id < 4; id++) {
            cs.push_back(random_classifier(id, 4, 1 + rng() % 3, rng));
        }
        auto r = diagonal_sparse_set(cs, 4, 1);
        ASSERT_TRUE(r.premise_holds);
        ASSERT_TRUE(r.found);
        EXPECT_LE(r.set.size(), 2u);
        EXPECT_TRUE(oracle_escapes(r.set, cs));
        EXPECT_TRUE(escapes_all(r.set, cs));
        // Every earlier candidate of the same size is realized by someone.
        std::set<InputSet> realized;
        for (const auto &c : cs) {
            for (const auto &s : realized_sets(c).sets) {
                realized.insert(s);
            }
        }
        EXPECT_FALSE(realized.contains(r.set));
        if (r.set.size() == 1) {
            for (uint64_t x = 0; x < r.set[0]; x++) {
                EXPECT_TRUE(realized.contains(InputSet{x}));
            }
        }
    }
}

TEST(separations, diagonal_errors) {
    EXPECT_THROW(diagonal_sparse_set({constant_classifier(1, 3, 1, 0)}, 2, 1), std::invalid_argument);
    EXPECT_THROW(diagonal_sparse_set({}, 2, 3), std::invalid_argument);
}

TEST(separations, escapes_all_rejects_realized_sets) {
    auto c = constant_classifier(1, 2, 1, 0.9);
    EXPECT_FALSE(escapes_all({0, 1, 2, 3}, {c}));
    EXPECT_TRUE(escapes_all({0}, {c}));
    EXPECT_FALSE(escapes_all({9}, {c}));
}

TEST(separations, majority_examples) {
    EXPECT_EQ(majority_amplify(Rational(2, 3), 1), Rational(2, 3));
    EXPECT_EQ(majority_amplify(Rational(1, 2), 99), Rational(1, 2));
    EXPECT_EQ(majority_amplify(Rational(2, 3), 3), Rational(20, 27));
    EXPECT_NEAR(majority_amplify(2.0 / 3, 3), 20.0 / 27, 1e-15);
    EXPECT_THROW(majority_amplify(Rational(2, 3), 4), std::invalid_argument);
    EXPECT_THROW(majority_amplify(1.5, 3), std::invalid_argument);
    for (uint64_t t = 1; t <= 41; t += 2) {
        for (auto p : {Rational(1, 5), Rational(3, 5), Rational(9, 10)}) {
            auto exact = majority_amplify(p, t);
            EXPECT_EQ(exact, oracle_majority(p, t));
            EXPECT_NEAR(majority_amplify(to_double(p), t), to_double(exact), 1e-12);
        }
    }
}

TEST(separations, majority_monotone_and_hoeffding) {
    for (double p : {0.55, 2.0 / 3, 0.9}) {
        double prev = 0;
        for (uint64_t t = 1; t <= 201; t += 2) {
            double v = majority_amplify(p, t);
            if (prev < 1 - 1e-12) {
                EXPECT_GT(v, prev) << p << " " << t;
            } else {
                EXPECT_GE(v, prev);
            }
            EXPECT_GE(v + 1e-12, 1 - std::exp(-2 * (double)t * (p - 0.5) * (p - 0.5)));
            prev = v;
        }
    }
}

TEST(separations, advice_copies_examples) {
    // Just under 1/3 the bare 2/3 no longer suffices and three copies are needed.
    EXPECT_EQ(advice_copies_for(Rational(1, 3) - Rational(1, 1000000)), 3u);
    EXPECT_EQ(advice_copies_for(Rational(1, 3) - Rational(1, 1000000), Rational(3, 4)), 1u);
    EXPECT_THROW(advice_copies_for(Rational(1, 3)), std::invalid_argument);
    EXPECT_THROW(advice_copies_for(Rational(0)), std::invalid_argument);

    Rational eps(1, 1024);
    uint64_t t = advice_copies_for(eps);
    EXPECT_GE(oracle_majority(Rational(2, 3), t), 1 - eps);
    EXPECT_LT(oracle_majority(Rational(2, 3), t - 2), 1 - eps);
}

TEST(separations, advice_copies_monte_carlo) {
    Rational eps(1, 20);
    uint64_t t = advice_copies_for(eps);
    EXPECT_GE(oracle_majority(Rational(2, 3), t), Rational(19, 20));
    EXPECT_LT(oracle_majority(Rational(2, 3), t - 2), Rational(19, 20));

    std::mt19937_64 rng(6);
    std::binomial_distribution<uint64_t> runs(t, 2.0 / 3);
    const uint64_t trials = 1000000;
    uint64_t good = 0;
    for (uint64_t k = 0; k < trials; k++) {
        good += 2 * runs(rng) > t;
    }
    double p = to_double(majority_amplify(Rational(2, 3), t));
    double sigma = std::sqrt(p * (1 - p) / (double)trials);
    EXPECT_NEAR((double)good / (double)trials, p, 3 * sigma);
}
