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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "expect_error.h"
#include "grac/classical.h"
#include "grac/report.h"
#include "oracles.h"

namespace grac {
namespace {

std::vector<uint32_t> bits_of(const FunctionSet &s) {
    std::vector<uint32_t> out;
    for (const auto &l : s.labels()) {
        out.push_back(l.bits());
    }
    return out;
}

std::string reduced(oracle::Frac f) {
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

TEST(Rational, ComparesByValueKeepsTotals) {
    Rational a{37, 56}, b{74, 112}, c{2, 3};
    EXPECT_EQ(a, b);
    EXPECT_LT(a, c);
    EXPECT_GT(c, a);
    EXPECT_EQ(a.to_string(), "37/56");
    EXPECT_EQ(Rational({42, 56}).reduced(), "3/4");
    EXPECT_EQ(Rational({0, 8}).reduced(), "0/1");
}

TEST(EvaluateClassical, ReferenceStrategiesOnFullSet) {
    const FunctionSet all = full_mubs(3);
    Rational maj = evaluate_classical(majority_three_bit_strategy(false), all);
    EXPECT_EQ(maj.wins, 32u);
    EXPECT_EQ(maj.total, 56u);
    EXPECT_EQ(evaluate_classical(majority_three_bit_strategy(true), all).wins, 36u);
    Rational best = evaluate_classical(best_three_bit_strategy(), all);
    EXPECT_EQ(best.wins, 37u);
    EXPECT_EQ(best.total, 56u);
}

TEST(EvaluateClassical, PerQuestionRowsMatchDirectCount) {
    const FunctionSet all = full_mubs(3);
    const ClassicalStrategy s = best_three_bit_strategy();
    auto wins = per_question_wins(s, all);
    for (size_t i = 0; i < all.size(); i++) {
        uint64_t count = 0;
        for (uint32_t x = 0; x < 8; x++) {
            bool omega = s.encoding(x);
            count += s.decode(all[i], omega) == oracle::parity(3, all[i].bits(), x);
        }
        EXPECT_EQ(wins[i], count) << all[i].to_string();
    }
    EXPECT_EQ(std::accumulate(wins.begin(), wins.end(), uint64_t{0}), 37u);
}

TEST(EvaluateClassical, Errors) {
    ClassicalStrategy s = ClassicalStrategy::identity(BooleanFn::from_bitstring("0110"), FunctionSet::parse(2, "10"));
    expect_code(ErrorCode::WidthMismatch, [&] { evaluate_classical(s, full_mubs(3)); });
    expect_code(ErrorCode::MissingDecoding, [&] { evaluate_classical(s, FunctionSet::parse(2, "01")); });
}

TEST(BestDecoding, TrivialCases) {
    // Encoding the asked function directly wins every round.
    auto [dec, value] = best_decoding(parity_function(ParityLabel(3, 0b100)), FunctionSet::parse(3, "100"));
    EXPECT_EQ(value.wins, 8u);
    EXPECT_EQ(dec.decode(ParityLabel(3, 0b100), false), 0);
    EXPECT_EQ(dec.decode(ParityLabel(3, 0b100), true), 1);
    // A constant message carries nothing: every balanced question scores 1/2, ties decode to 0.
    auto [cdec, cval] = best_decoding(BooleanFn::constant(3, false), full_mubs(3));
    EXPECT_EQ(cval, (Rational{28, 56}));
    for (const auto &rule : cdec.decoding) {
        EXPECT_EQ(rule.guess[0], 0);
        EXPECT_EQ(rule.guess[1], 0);
    }
}

TEST(BestDecoding, MajorityRowsFromEncodingAlone) {
    auto [dec, value] = best_decoding(BooleanFn::from_bitstring("00010111"), full_mubs(3));
    const FunctionSet all = full_mubs(3);
    auto wins = per_question_wins(dec, all);
    // 111 is answered with the inverse guess, as in the reference row.
    EXPECT_EQ(wins[static_cast<size_t>(all.index_of(ParityLabel(3, 0b111)))], 6u);
    EXPECT_EQ(wins[static_cast<size_t>(all.index_of(ParityLabel(3, 0b110)))], 4u);
    EXPECT_EQ(wins[static_cast<size_t>(all.index_of(ParityLabel(3, 0b100)))], 6u);
    EXPECT_EQ(value.wins, 36u);
}

TEST(BestDecoding, DominatesRandomDecodings) {
    std::mt19937_64 rng(11);
    const FunctionSet all = full_mubs(3);
    for (int trial = 0; trial < 200; trial++) {
        BooleanFn enc(3, rng() & 0xFF);
        auto [dec, value] = best_decoding(enc, all);
        EXPECT_EQ(value, evaluate_classical(dec, all));
        ClassicalStrategy other{enc, {}};
        for (const auto &l : all.labels()) {
            other.decoding.push_back({l, {static_cast<uint8_t>(rng() & 1), static_cast<uint8_t>(rng() & 1)}});
        }
        EXPECT_GE(value, evaluate_classical(other, all));
    }
}

TEST(ClassicalOptimum, AgreesWithBruteForceOnEverySubsetAtWidthThree) {
    for (size_t k = 1; k <= 7; k++) {
        for (const auto &set : subsets_of_size(3, k)) {
            ClassicalOptimum opt = classical_optimum(3, set);
            EXPECT_EQ(opt.value.reduced(), reduced(oracle::classical_optimum(3, bits_of(set)))) << set.to_string();
            EXPECT_EQ(opt.value.total, 8 * k);
            ASSERT_FALSE(opt.strategies.empty());
            for (const auto &s : opt.strategies) {
                EXPECT_EQ(evaluate_classical(s, set), opt.value);
            }
        }
    }
}

TEST(ClassicalOptimum, AgreesWithBruteForceAtWidthTwo) {
    for (size_t k = 1; k <= 3; k++) {
        for (const auto &set : subsets_of_size(2, k)) {
            EXPECT_EQ(classical_optimum(2, set).value.reduced(), reduced(oracle::classical_optimum(2, bits_of(set))));
        }
    }
}

TEST(ClassicalOptimum, ValueDependsOnlyOnOrbit) {
    for (const auto &set : subsets_of_size(3, 4)) {
        Rational want = classify_quadruple(set) == QuadrupleClass::XorClosed ? Rational{3, 4} : Rational{11, 16};
        EXPECT_EQ(classical_optimum(3, set, 1).value, want) << set.to_string();
    }
    for (const auto &set : subsets_of_size(3, 5)) {
        EXPECT_EQ(classical_optimum(3, set, 1).value, (Rational{7, 10}));
    }
    for (const auto &set : subsets_of_size(3, 6)) {
        EXPECT_EQ(classical_optimum(3, set, 1).value, (Rational{2, 3}));
    }
    for (size_t k : {2u, 3u}) {
        for (const auto &set : subsets_of_size(3, k)) {
            EXPECT_EQ(classical_optimum(3, set, 1).value, (Rational{3, 4}));
        }
    }
}

TEST(ClassicalOptimum, FullSetAndCap) {
    ClassicalOptimum opt = classical_optimum(3, full_mubs(3), 4);
    EXPECT_EQ(opt.value.wins, 37u);
    EXPECT_EQ(opt.value.total, 56u);
    EXPECT_EQ(opt.strategies.size(), 4u);
    EXPECT_GE(opt.num_optimal_encodings, 4u);
    // The reference strategy's encoding is among the optimal ones.
    EXPECT_GE(evaluate_classical(best_three_bit_strategy(), full_mubs(3)), opt.value);
    EXPECT_TRUE(std::is_sorted(opt.strategies.begin(), opt.strategies.end(),
                               [](const auto &a, const auto &b) { return a.encoding.table() < b.encoding.table(); }));
}

TEST(ClassicalOptimum, Errors) {
    expect_code(ErrorCode::WidthOutOfRange, [] { classical_optimum(5, full_mubs(5)); });
    expect_code(ErrorCode::WidthMismatch, [] { classical_optimum(3, full_mubs(2)); });
}

TEST(RacLift, ReferenceValues) {
    // (2 -> 1) majority lifted to the first two bits.
    ClassicalStrategy rac2 = majority_rac(2);
    EXPECT_EQ(evaluate_classical(rac2, rac_set(2)), (Rational{3, 4}));
    FunctionSet pair = FunctionSet::parse(3, "100,010");
    EXPECT_EQ(evaluate_classical(lift_rac_strategy(rac2, pair, {1, 0}), pair), (Rational{3, 4}));
    // Identity 1-bit RAC on a singleton.
    FunctionSet single = FunctionSet::parse(3, "011");
    EXPECT_EQ(evaluate_classical(lift_rac_strategy(majority_rac(1), single, {0}), single), (Rational{1, 1}));
    // (3 -> 1) majority on the three unit labels.
    FunctionSet units = FunctionSet::parse(3, "100,010,001");
    EXPECT_EQ(best_lift(majority_rac(3), units).value, (Rational{3, 4}));
}

TEST(RacLift, MajorityRacValues) {
    const Rational want[] = {{1, 1}, {3, 4}, {3, 4}, {11, 16}, {11, 16}, {21, 32}};
    for (int k = 1; k <= 6; k++) {
        EXPECT_EQ(evaluate_classical(majority_rac(k), rac_set(k)), want[k - 1]) << k;
    }
    EXPECT_EQ(worst_case_success(majority_rac(3)), (Rational{2, 3}));
}

TEST(RacLift, Errors) {
    FunctionSet pair = FunctionSet::parse(3, "100,010");
    expect_code(ErrorCode::CardinalityMismatch, [&] { lift_rac_strategy(majority_rac(3), pair, {0, 1, 2}); });
    expect_code(ErrorCode::InvalidArgument, [&] { lift_rac_strategy(majority_rac(2), pair, {0, 0}); });
}

TEST(ResolveLabels, CanonicalRepresentatives) {
    EXPECT_EQ(resolve_labels(3, "k=2").to_string(), "010,100");
    EXPECT_EQ(resolve_labels(3, "k=4:open").to_string(), "001,010,100,110");
    EXPECT_EQ(resolve_labels(3, "k=4:xor-closed").to_string(), "001,010,100,111");
    EXPECT_EQ(resolve_labels(3, "all"), full_mubs(3));
    EXPECT_EQ(resolve_labels(3, "k=7"), full_mubs(3));
    expect_code(ErrorCode::WrongCardinality, [] { resolve_labels(3, "k=8"); });
    expect_code(ErrorCode::InvalidArgument, [] { resolve_labels(3, "k=3:open"); });
    expect_code(ErrorCode::ParseError, [] { resolve_labels(3, "k=4:closed"); });
    expect_code(ErrorCode::ParseError, [] { resolve_labels(3, "k=x"); });
}

}  // namespace
}  // namespace grac
