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

#ifndef QADVICE_SEPARATIONS_H
#define QADVICE_SEPARATIONS_H

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "qadvice/rational.h"

namespace qadvice {

struct CountingInequality {
    size_t n = 0;
    size_t f = 0;
    /// sum_{j <= 2f} C(2^n, j): subsets of size at most 2f.
    BigInt lhs;
    /// 2^{fn}: advice strings of length fn.
    BigInt rhs;
    bool holds = false;
    /// (2^n / 2f)^{2f}, the textbook lower estimate of lhs.
    Rational intermediate;
    /// n > 2 + 2 log2 f, which is when intermediate > rhs.
    bool sufficient_condition = false;
};

/// Requires 1 <= 2f <= 2^n and n <= 62.
CountingInequality counting_inequality(size_t n, size_t f);

/// Finite stand-in for an advised machine: acceptance probabilities indexed by
/// (advice s, input x), with x and s read as lexicographic indices.
struct AdvisedClassifier {
    uint64_t id = 0;
    size_t n = 0;
    size_t advice_len = 0;
    /// table[s * 2^n + x].
    std::vector<double> table;

    double acceptance(uint64_t x, uint64_t s) const {
        return table[(s << n) + x];
    }
    /// Checks table size and that every entry lies in [0, 1].
    void validate() const;

    nlohmann::json to_json() const;
    static AdvisedClassifier from_json(const nlohmann::json &j);
};

/// Largest 2^n * 2^advice_len handled by the enumerations below.
inline constexpr uint64_t DESK_SCALE_LIMIT = uint64_t{1} << 24;

/// Sets are sorted lists of input indices.
using InputSet = std::vector<uint64_t>;

struct RealizedSetFamily {
    uint64_t classifier_id = 0;
    /// Sorted, duplicate free.
    std::vector<InputSet> sets;
};

/// {x : table(x, s) >= 2/3} for every advice s, deduplicated.
RealizedSetFamily realized_sets(const AdvisedClassifier &c);

struct DiagonalResult {
    bool found = false;
    InputSet set;
    size_t candidates_examined = 0;
    /// Sum of the realized family sizes; found is guaranteed when lhs exceeds it.
    uint64_t family_total = 0;
    CountingInequality counting;
    bool premise_holds = false;
};

/// First set of size <= 2f (ordered by size, then lexicographically) outside
/// every classifier's realized family. Every classifier must have input length n.
DiagonalResult diagonal_sparse_set(const std::vector<AdvisedClassifier> &classifiers, size_t n, size_t f);

/// Independent re-check: for every classifier and advice s there is an input on
/// which s both misses the 2/3 threshold for L and decides L with probability < 2/3.
bool escapes_all(const InputSet &set, const std::vector<AdvisedClassifier> &classifiers);

/// Pr[majority of t independent runs is correct], t odd.
Rational majority_amplify(const Rational &p, uint64_t t);
double majority_amplify(double p, uint64_t t);

/// Least odd t with majority_amplify(base_p, t) >= 1 - epsilon. Requires 0 < epsilon < 1/3.
uint64_t advice_copies_for(const Rational &epsilon, const Rational &base_p = Rational(2, 3));

}  // namespace qadvice

#endif
