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

#include "grac/classical.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "grac/error.h"

namespace grac {

std::string Rational::reduced() const {
    uint64_t g = std::gcd(wins, total);
    if (g == 0) {
        g = 1;
    }
    return std::to_string(wins / g) + "/" + std::to_string(total / g);
}

std::string Rational::to_string() const {
    return std::to_string(wins) + "/" + std::to_string(total);
}

uint8_t ClassicalStrategy::decode(const ParityLabel &y, bool omega) const {
    for (const auto &rule : decoding) {
        if (rule.label == y) {
            return rule.guess[omega];
        }
    }
    throw Error(ErrorCode::MissingDecoding, "no decoding rule for label " + y.to_string());
}

ClassicalStrategy ClassicalStrategy::identity(const BooleanFn &encoding, const FunctionSet &set) {
    ClassicalStrategy s{encoding, {}};
    for (const auto &label : set.labels()) {
        s.decoding.push_back({label, {0, 1}});
    }
    return s;
}

std::vector<uint64_t> per_question_wins(const ClassicalStrategy &strategy, const FunctionSet &set) {
    if (strategy.encoding.width() != set.width()) {
        throw Error(ErrorCode::WidthMismatch, "encoding width " + std::to_string(strategy.encoding.width()) +
                                                  " vs question width " + std::to_string(set.width()));
    }
    std::vector<uint64_t> wins;
    wins.reserve(set.size());
    for (const auto &label : set.labels()) {
        uint64_t fy = parity_function(label).table();
        uint64_t count = 0;
        for (bool omega : {false, true}) {
            uint64_t fiber = strategy.encoding.preimage(omega);
            bool z = strategy.decode(label, omega);
            uint64_t answered = z ? fy : ~fy;
            count += static_cast<uint64_t>(std::popcount(fiber & answered));
        }
        wins.push_back(count);
    }
    return wins;
}

Rational evaluate_classical(const ClassicalStrategy &strategy, const FunctionSet &set) {
    auto wins = per_question_wins(strategy, set);
    return {std::accumulate(wins.begin(), wins.end(), uint64_t{0}), set.num_inputs() * set.size()};
}

std::pair<ClassicalStrategy, Rational> best_decoding(const BooleanFn &encoding, const FunctionSet &set) {
    if (encoding.width() != set.width()) {
        throw Error(ErrorCode::WidthMismatch, "encoding and question widths differ");
    }
    ClassicalStrategy s{encoding, {}};
    uint64_t wins = 0;
    for (const auto &label : set.labels()) {
        uint64_t fy = parity_function(label).table();
        DecodeRule rule{label, {0, 0}};
        for (bool omega : {false, true}) {
            uint64_t fiber = encoding.preimage(omega);
            auto ones = static_cast<uint64_t>(std::popcount(fiber & fy));
            auto size = static_cast<uint64_t>(std::popcount(fiber));
            uint64_t zeros = size - ones;
            rule.guess[omega] = ones > zeros ? 1 : 0;
            wins += std::max(ones, zeros);
        }
        s.decoding.push_back(rule);
    }
    return {std::move(s), Rational{wins, set.num_inputs() * set.size()}};
}

ClassicalOptimum classical_optimum(int n, const FunctionSet &set, size_t cap) {
    if (n < 1 || n > kMaxClassicalWidth) {
        throw Error(ErrorCode::WidthOutOfRange, "exhaustive classical search supports 1 <= n <= 4, got " +
                                                    std::to_string(n));
    }
    if (set.width() != n) {
        throw Error(ErrorCode::WidthMismatch, "question set width differs from n");
    }
    const uint64_t num_encodings = uint64_t{1} << (uint64_t{1} << n);
    const uint64_t total = set.num_inputs() * set.size();

    // Per-question tables are reused across encodings.
    std::vector<uint64_t> tables;
    for (const auto &label : set.labels()) {
        tables.push_back(parity_function(label).table());
    }
    const uint64_t full = input_mask(n);

    ClassicalOptimum best;
    best.value = {0, total};
    std::vector<uint64_t> optimal;
    for (uint64_t e = 0; e < num_encodings; e++) {
        uint64_t wins = 0;
        uint64_t f1 = e, f0 = ~e & full;
        auto n1 = static_cast<uint64_t>(std::popcount(f1));
        auto n0 = static_cast<uint64_t>(std::popcount(f0));
        for (uint64_t fy : tables) {
            auto o1 = static_cast<uint64_t>(std::popcount(f1 & fy));
            auto o0 = static_cast<uint64_t>(std::popcount(f0 & fy));
            wins += std::max(o1, n1 - o1) + std::max(o0, n0 - o0);
        }
        if (wins > best.value.wins) {
            best.value.wins = wins;
            optimal.clear();
        }
        if (wins == best.value.wins) {
            optimal.push_back(e);
        }
    }
    best.num_optimal_encodings = optimal.size();
    for (size_t i = 0; i < optimal.size() && i < cap; i++) {
        best.strategies.push_back(best_decoding(BooleanFn(n, optimal[i]), set).first);
    }
    return best;
}

FunctionSet rac_set(int k) {
    std::vector<ParityLabel> labels;
    for (int j = 0; j < k; j++) {
        labels.emplace_back(k, uint32_t{1} << j);
    }
    return FunctionSet(k, std::move(labels));
}

ClassicalStrategy majority_rac(int k) {
    uint64_t table = 0;
    for (uint32_t x = 0; x < (uint32_t{1} << k); x++) {
        int ones = std::popcount(x);
        bool maj = 2 * ones > k || (2 * ones == k && ((x >> (k - 1)) & 1));
        if (maj) {
            table |= uint64_t{1} << x;
        }
    }
    BooleanFn enc(k, table);
    return ClassicalStrategy::identity(enc, rac_set(k));
}

Rational worst_case_success(const ClassicalStrategy &rac) {
    int k = rac.encoding.width();
    FunctionSet questions = rac_set(k);
    Rational worst{static_cast<uint64_t>(k), static_cast<uint64_t>(k)};
    for (uint32_t x = 0; x < (uint32_t{1} << k); x++) {
        bool omega = rac.encoding(x);
        uint64_t right = 0;
        for (const auto &label : questions.labels()) {
            if (rac.decode(label, omega) == label.eval(x)) {
                right++;
            }
        }
        worst.wins = std::min(worst.wins, right);
    }
    return worst;
}

ClassicalStrategy lift_rac_strategy(const ClassicalStrategy &rac, const FunctionSet &set,
                                    const std::vector<size_t> &perm) {
    const int k = rac.encoding.width();
    if (static_cast<size_t>(k) != set.size() || perm.size() != set.size()) {
        throw Error(ErrorCode::CardinalityMismatch, "RAC on " + std::to_string(k) + " bits cannot serve " +
                                                        std::to_string(set.size()) + " questions");
    }
    std::vector<bool> seen(perm.size(), false);
    for (size_t p : perm) {
        if (p >= perm.size() || seen[p]) {
            throw Error(ErrorCode::InvalidArgument, "perm is not a permutation of the question indices");
        }
        seen[p] = true;
    }
    const int n = set.width();
    uint64_t table = 0;
    for (uint32_t x = 0; x < set.num_inputs(); x++) {
        // RAC bit j + 1 is the most significant bit first.
        uint32_t derived = 0;
        for (size_t j = 0; j < perm.size(); j++) {
            derived = (derived << 1) | static_cast<uint32_t>(set[perm[j]].eval(x));
        }
        if (rac.encoding(derived)) {
            table |= uint64_t{1} << x;
        }
    }
    ClassicalStrategy lifted{BooleanFn(n, table), {}};
    for (size_t j = 0; j < perm.size(); j++) {
        ParityLabel rac_label(k, uint32_t{1} << (k - 1 - static_cast<int>(j)));
        lifted.decoding.push_back({set[perm[j]], {rac.decode(rac_label, false), rac.decode(rac_label, true)}});
    }
    std::sort(lifted.decoding.begin(), lifted.decoding.end(),
              [](const DecodeRule &a, const DecodeRule &b) { return a.label < b.label; });
    return lifted;
}

LiftResult best_lift(const ClassicalStrategy &rac, const FunctionSet &set) {
    std::vector<size_t> perm(set.size());
    std::iota(perm.begin(), perm.end(), size_t{0});
    std::optional<LiftResult> best;
    do {
        ClassicalStrategy s = lift_rac_strategy(rac, set, perm);
        Rational v = evaluate_classical(s, set);
        if (!best || v > best->value) {
            best = LiftResult{std::move(s), perm, v};
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::move(*best);
}

}  // namespace grac
