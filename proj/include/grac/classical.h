// Copyright 2026 The GRAC Authors
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

#ifndef GRAC_CLASSICAL_H
#define GRAC_CLASSICAL_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grac/boolean_fn.h"

namespace grac {

/// Exact success count. Kept unreduced so `total` is always 2^n |R_i|.
struct Rational {
    uint64_t wins = 0;
    uint64_t total = 1;

    double value() const {
        return static_cast<double>(wins) / static_cast<double>(total);
    }
    /// Lowest-terms form, e.g. "37/56" or "7/10".
    std::string reduced() const;
    /// Unreduced form "wins/total".
    std::string to_string() const;

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.wins * b.total == b.wins * a.total;
    }
    friend bool operator<(const Rational &a, const Rational &b) {
        return a.wins * b.total < b.wins * a.total;
    }
    friend bool operator>(const Rational &a, const Rational &b) {
        return b < a;
    }
    friend bool operator<=(const Rational &a, const Rational &b) {
        return !(b < a);
    }
    friend bool operator>=(const Rational &a, const Rational &b) {
        return !(a < b);
    }
};

/// Guess z for each of the two possible messages, for one question label.
struct DecodeRule {
    ParityLabel label;
    std::array<uint8_t, 2> guess;  // guess[omega]
};

/// Deterministic one-bit strategy: omega = encoding(x), z = decoding(y, omega).
struct ClassicalStrategy {
    BooleanFn encoding;
    std::vector<DecodeRule> decoding;

    /// Guess for label y on message omega. Throws MissingDecoding.
    uint8_t decode(const ParityLabel &y, bool omega) const;

    /// z = omega for every label of `set`.
    static ClassicalStrategy identity(const BooleanFn &encoding, const FunctionSet &set);
};

struct ClassicalOptimum {
    Rational value;
    /// Optimal strategies, ascending by encoding table. Capped by the caller.
    std::vector<ClassicalStrategy> strategies;
    /// Number of encodings reaching the optimum (not capped).
    uint64_t num_optimal_encodings = 0;
};

/// Per-question win counts out of 2^n, aligned with `set` order.
std::vector<uint64_t> per_question_wins(const ClassicalStrategy &strategy, const FunctionSet &set);

Rational evaluate_classical(const ClassicalStrategy &strategy, const FunctionSet &set);

/// Majority-vote decoding for a fixed encoding; ties guess 0.
std::pair<ClassicalStrategy, Rational> best_decoding(const BooleanFn &encoding, const FunctionSet &set);

inline constexpr int kMaxClassicalWidth = 4;
inline constexpr size_t kDefaultStrategyCap = 16;

/// Exact optimum over all 2^(2^n) deterministic encodings (n <= 4).
ClassicalOptimum classical_optimum(int n, const FunctionSet &set, size_t cap = kDefaultStrategyCap);

/// The standard (k -> 1) RAC as a set: the k unit labels on k input bits.
FunctionSet rac_set(int k);

/// maj(x) with ties going to x_1, identity decoding; a strategy for rac_set(k).
ClassicalStrategy majority_rac(int k);

/// Smallest success over RAC inputs, i.e. min over x of the per-input fraction
/// of questions answered correctly.
Rational worst_case_success(const ClassicalStrategy &rac);

/// Runs a (k -> 1) RAC on the derived string (f_r(x))_r. `perm[j]` is the
/// index in `set` of the label fed to RAC bit j + 1.
ClassicalStrategy lift_rac_strategy(const ClassicalStrategy &rac, const FunctionSet &set,
                                    const std::vector<size_t> &perm);

struct LiftResult {
    ClassicalStrategy strategy;
    std::vector<size_t> perm;
    Rational value;
};

/// Scans all |R_i|! orderings and keeps the best lift (first in
/// lexicographic order on ties).
LiftResult best_lift(const ClassicalStrategy &rac, const FunctionSet &set);

}  // namespace grac

#endif  // GRAC_CLASSICAL_H
