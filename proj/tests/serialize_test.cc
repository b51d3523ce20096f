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

#include <random>

#include "expect_error.h"
#include "grac/report.h"
#include "grac/serialize.h"

namespace grac {
namespace {

TEST(Serialize, ClassicalStrategyLayoutAndRoundTrip) {
    const FunctionSet all = full_mubs(3);
    ClassicalStrategy s = best_three_bit_strategy();
    Json j = to_json(s);
    EXPECT_EQ(j["encoding"], "00001110");
    EXPECT_EQ(j["decoding"]["010:0"], 1);
    EXPECT_EQ(j["decoding"]["100:1"], 1);
    ClassicalStrategy back = classical_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.encoding, s.encoding);
    EXPECT_EQ(evaluate_classical(back, all), evaluate_classical(s, all));
    for (const auto &l : all.labels()) {
        EXPECT_EQ(back.decode(l, false), s.decode(l, false));
        EXPECT_EQ(back.decode(l, true), s.decode(l, true));
    }
}

TEST(Serialize, ClassicalErrors) {
    expect_code(ErrorCode::ParseError, [] { classical_from_json(Json::parse(R"({"n": 3})")); });
    expect_code(ErrorCode::WidthMismatch,
                [] { classical_from_json(Json::parse(R"({"n": 2, "encoding": "00001110", "decoding": {}})")); });
    expect_code(ErrorCode::ParseError, [] {
        classical_from_json(Json::parse(R"({"n": 3, "encoding": "00001110", "decoding": {"100": 1}})"));
    });
    expect_code(ErrorCode::ParseError, [] {
        classical_from_json(Json::parse(R"({"n": 3, "encoding": "00001110", "decoding": {"100:0": 2}})"));
    });
}

TEST(Serialize, PMStrategyRoundTripIsExact) {
    for (FixtureCase c : all_fixture_cases()) {
        Fixture fx = explicit_fixture(c);
        Json j = to_json(fx.strategy);
        EXPECT_TRUE(j["preparations"].contains("101"));
        PMStrategy back = pm_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.preparations, fx.strategy.preparations);
        EXPECT_EQ(evaluate_pm(back, fx.set), evaluate_pm(fx.strategy, fx.set));
    }
    expect_code(ErrorCode::ParseError, [] {
        pm_from_json(Json::parse(R"({"n": 1, "preparations": {"0": [1,0,0]}, "measurements": {}})"));
    });
    expect_code(ErrorCode::ParseError, [] {
        pm_from_json(Json::parse(R"({"n": 1, "preparations": {"0": [1,0], "1": [1,0,0]}, "measurements": {}})"));
    });
}

TEST(Serialize, EACCStrategyRoundTripIsExact) {
    const FunctionSet set = resolve_labels(3, "k=3");
    std::mt19937_64 rng(14);
    EACCStrategy s = random_eacc_strategy(set, 2, rng);
    Json j = to_json(s);
    // Complex entries are [re, im]; the state is 4 x 4 on A (x) B.
    EXPECT_EQ(j["state"].size(), 4u);
    EXPECT_EQ(j["state"][0][1].size(), 2u);
    EXPECT_TRUE(j["bob"].contains("100:1"));
    EACCStrategy back = eacc_from_json(Json::parse(j.dump()));
    EXPECT_TRUE(back.state == s.state);
    EXPECT_EQ(evaluate_eacc(back, set), evaluate_eacc(s, set));
    expect_code(ErrorCode::ParseError, [] { matrix_from_json(Json::parse("[[[1, 0]], [[1, 0], [0, 0]]]")); });
    expect_code(ErrorCode::ParseError, [] { matrix_from_json(Json::parse("[[1]]")); });
}

TEST(Serialize, CrossingWindow) {
    CrossingWindow w{0.5, 0.871, 1e-4};
    Json j = to_json(w);
    EXPECT_EQ(j.dump(), R"({"low":0.5,"high":0.871,"tol":0.0001})");
    CrossingWindow back = window_from_json(j);
    EXPECT_EQ(back.low, w.low);
    EXPECT_EQ(back.high, w.high);
    expect_code(ErrorCode::ParseError, [] { window_from_json(Json::parse(R"({"low": 0.5})")); });
}

}  // namespace
}  // namespace grac
