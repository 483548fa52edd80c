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

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qadvice {

namespace {

BigInt binomial(const BigInt &n, uint64_t k) {
    BigInt r = 1;
    for (uint64_t i = 0; i < k; i++) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

Rational power(const Rational &base, uint64_t e) {
    BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base), (unsigned)e);
    BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base), (unsigned)e);
    return Rational(num, den);
}

bool meets_threshold(double t) {
    return 3 * t >= 2;
}

void check_scale(const AdvisedClassifier &c) {
    if (c.n > 24 || c.advice_len > 24 || c.n + c.advice_len > 24) {
        throw std::invalid_argument(
            "Classifier " + std::to_string(c.id) + " exceeds desk scale (2^n * 2^advice_len > 2^24).");
    }
}

}  // namespace

CountingInequality counting_inequality(size_t n, size_t f) {
    if (n > 62) {
        throw std::invalid_argument("counting_inequality supports n <= 62.");
    }
    BigInt big_n = BigInt(1) << n;
    if (f < 1 || BigInt(2 * f) > big_n) {
        throw std::invalid_argument("counting_inequality needs 1 <= 2f <= 2^n.");
    }
    CountingInequality r;
    r.n = n;
    r.f = f;
    r.lhs = 0;
    for (uint64_t j = 0; j <= 2 * f; j++) {
        r.lhs += binomial(big_n, j);
    }
    r.rhs = BigInt(1) << (f * n);
    r.holds = r.lhs > r.rhs;
    Rational base(big_n, BigInt(2 * f));
    r.intermediate = 1;
    for (size_t j = 0; j < 2 * f; j++) {
        r.intermediate *= base;
    }
    r.sufficient_condition = (double)n > 2 + 2 * std::log2((double)f);
    return r;
}

void AdvisedClassifier::validate() const {
    check_scale(*this);
    uint64_t expected = uint64_t{1} << (n + advice_len);
    if (table.size() != expected) {
        throw std::invalid_argument(
            "Classifier " + std::to_string(id) + " has " + std::to_string(table.size()) + " entries, expected " +
            std::to_string(expected) + ".");
    }
    for (double t : table) {
        if (!(t >= 0 && t <= 1)) {
            throw std::invalid_argument("Classifier " + std::to_string(id) + " has a probability outside [0, 1].");
        }
    }
}

nlohmann::json AdvisedClassifier::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    uint64_t width = uint64_t{1} << n;
    for (uint64_t s = 0; s < (uint64_t{1} << advice_len); s++) {
        rows.push_back(std::vector<double>(table.begin() + (long)(s * width), table.begin() + (long)((s + 1) * width)));
    }
    return {{"id", id}, {"n", n}, {"advice_len", advice_len}, {"table", rows}};
}

AdvisedClassifier AdvisedClassifier::from_json(const nlohmann::json &j) {
    AdvisedClassifier c;
    c.id = j.at("id").get<uint64_t>();
    c.n = j.at("n").get<size_t>();
    c.advice_len = j.at("advice_len").get<size_t>();
    check_scale(c);
    for (const auto &row : j.at("table")) {
        if (row.size() != (size_t{1} << c.n)) {
            throw std::invalid_argument("Classifier " + std::to_string(c.id) + " has a table row of the wrong width.");
        }
        for (const auto &v : row) {
            c.table.push_back(v.is_string() ? to_double(parse_rational(v.get<std::string>())) : v.get<double>());
        }
    }
    c.validate();
    return c;
}

RealizedSetFamily realized_sets(const AdvisedClassifier &c) {
    c.validate();
    std::set<InputSet> seen;
    for (uint64_t s = 0; s < (uint64_t{1} << c.advice_len); s++) {
        InputSet a;
        for (uint64_t x = 0; x < (uint64_t{1} << c.n); x++) {
            if (meets_threshold(c.acceptance(x, s))) {
                a.push_back(x);
            }
        }
        seen.insert(std::move(a));
    }
    return {c.id, std::vector<InputSet>(seen.begin(), seen.end())};
}

DiagonalResult diagonal_sparse_set(const std::vector<AdvisedClassifier> &classifiers, size_t n, size_t f) {
    DiagonalResult r;
    r.counting = counting_inequality(n, f);
    if (r.counting.lhs > BigInt(DESK_SCALE_LIMIT)) {
        throw std::invalid_argument("diagonal_sparse_set candidate count exceeds desk scale.");
    }
    std::set<InputSet> family;
    for (const auto &c : classifiers) {
        if (c.n != n) {
            throw std::invalid_argument("Classifier " + std::to_string(c.id) + " has input length " +
                                        std::to_string(c.n) + ", expected " + std::to_string(n) + ".");
        }
        auto fam = realized_sets(c);
        r.family_total += fam.sets.size();
        family.insert(fam.sets.begin(), fam.sets.end());
    }
    r.premise_holds = r.counting.lhs > BigInt(r.family_total);

    uint64_t universe = uint64_t{1} << n;
    for (uint64_t size = 0; size <= 2 * f && !r.found; size++) {
        // Lexicographic walk over size-element combinations of {0, .., 2^n - 1}.
        InputSet comb(size);
        for (uint64_t i = 0; i < size; i++) {
            comb[i] = i;
        }
        while (true) {
            r.candidates_examined++;
            if (!family.contains(comb)) {
                r.found = true;
                r.set = comb;
                break;
            }
            size_t i = size;
            while (i > 0 && comb[i - 1] == universe - size + (i - 1)) {
                i--;
            }
            if (i == 0) {
                break;
            }
            comb[i - 1]++;
            for (size_t j = i; j < size; j++) {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    if (!r.found && r.premise_holds) {
        throw std::logic_error("Pigeonhole premise holds but no escaping set was found.");
    }
    return r;
}

bool escapes_all(const InputSet &set, const std::vector<AdvisedClassifier> &classifiers) {
    for (const auto &c : classifiers) {
        c.validate();
        uint64_t universe = uint64_t{1} << c.n;
        std::vector<bool> member(universe, false);
        for (auto x : set) {
            if (x >= universe) {
                return false;
            }
            member[x] = true;
        }
        for (uint64_t s = 0; s < (uint64_t{1} << c.advice_len); s++) {
            bool mismatch = false;
            bool decides_badly = false;
            for (uint64_t x = 0; x < universe; x++) {
                double t = c.acceptance(x, s);
                mismatch |= member[x] != meets_threshold(t);
                decides_badly |= !meets_threshold(member[x] ? t : 1 - t);
            }
            if (!mismatch || !decides_badly) {
                return false;
            }
        }
    }
    return true;
}

Rational majority_amplify(const Rational &p, uint64_t t) {
    if (p < 0 || p > 1) {
        throw std::invalid_argument("majority_amplify needs 0 <= p <= 1.");
    }
    if (t % 2 == 0) {
        throw std::invalid_argument("majority_amplify needs an odd repetition count.");
    }
    Rational q = 1 - p;
    Rational total = 0;
    for (uint64_t j = t / 2 + 1; j <= t; j++) {
        total += Rational(binomial(BigInt(t), j)) * power(p, j) * power(q, t - j);
    }
    return total;
}

double majority_amplify(double p, uint64_t t) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("majority_amplify needs 0 <= p <= 1.");
    }
    if (t % 2 == 0) {
        throw std::invalid_argument("majority_amplify needs an odd repetition count.");
    }
    // Log-space terms keep large t finite. For p > 1/2 the small failure tail is
    // summed instead, so the result stays monotone in t near 1.
    auto term = [&](uint64_t j) {
        double log_c = std::lgamma((double)t + 1) - std::lgamma((double)j + 1) - std::lgamma((double)(t - j) + 1);
        double term_p = j == 0 ? 0 : (p == 0 ? -INFINITY : (double)j * std::log(p));
        double term_q = t == j ? 0 : (p == 1 ? -INFINITY : (double)(t - j) * std::log1p(-p));
        return std::exp(log_c + term_p + term_q);
    };
    double total = 0;
    if (p > 0.5) {
        for (uint64_t j = 0; j <= t / 2; j++) {
            total += term(j);
        }
        return std::max(0.0, 1 - total);
    }
    for (uint64_t j = t / 2 + 1; j <= t; j++) {
        total += term(j);
    }
    return std::min(1.0, total);
}

uint64_t advice_copies_for(const Rational &epsilon, const Rational &base_p) {
    if (epsilon <= 0 || epsilon >= Rational(1, 3)) {
        throw std::invalid_argument("advice_copies_for needs 0 < epsilon < 1/3.");
    }
    if (base_p <= Rational(1, 2)) {
        throw std::invalid_argument("advice_copies_for needs base_p > 1/2.");
    }
    for (uint64_t t = 1;; t += 2) {
        if (majority_amplify(base_p, t) >= 1 - epsilon) {
            return t;
        }
    }
}

}  // namespace qadvice
