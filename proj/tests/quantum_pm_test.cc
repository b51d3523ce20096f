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

#include <cmath>
#include <random>

#include "expect_error.h"
#include "grac/quantum_pm.h"
#include "grac/report.h"
#include "oracles.h"

namespace grac {
namespace {

const double kOpen4 = 0.5 * (1.0 + (std::sqrt(2.0) + std::sqrt(6.0)) / 8.0);

PMStrategy random_strategy(const FunctionSet &set, std::mt19937_64 &rng) {
    PMStrategy s;
    s.n = set.width();
    for (size_t x = 0; x < set.num_inputs(); x++) {
        s.preparations.push_back(random_unit_vector(rng));
    }
    for (const auto &l : set.labels()) {
        s.labels.push_back(l);
        s.measurements.push_back(random_unit_vector(rng));
    }
    return s;
}

// Success computed from density matrices and projectors.
double oracle_success(const PMStrategy &s, const FunctionSet &set) {
    double total = 0.0;
    for (size_t i = 0; i < set.size(); i++) {
        const BlochVector &v = s.measurement(set[i]);
        for (uint32_t x = 0; x < set.num_inputs(); x++) {
            oracle::C2 rho = oracle::density(s.preparations[x].c.data());
            double plus = oracle::prob_plus(rho, v.c.data());
            total += oracle::parity(set.width(), set[i].bits(), x) ? 1.0 - plus : plus;
        }
    }
    return total / static_cast<double>(set.num_inputs() * set.size());
}

TEST(EvaluatePM, MatchesDensityMatrixOracle) {
    std::mt19937_64 rng(3);
    for (size_t k = 1; k <= 7; k++) {
        for (const auto &set : subsets_of_size(3, k)) {
            PMStrategy s = random_strategy(set, rng);
            EXPECT_NEAR(evaluate_pm(s, set), oracle_success(s, set), 1e-12);
        }
    }
}

TEST(EvaluatePM, ClassicalEmbeddingIsExact) {
    std::mt19937_64 rng(5);
    const FunctionSet all = full_mubs(3);
    for (int trial = 0; trial < 100; trial++) {
        BooleanFn enc(3, rng() & 0xFF);
        ClassicalStrategy s{enc, {}};
        for (const auto &l : all.labels()) {
            s.decoding.push_back({l, {static_cast<uint8_t>(rng() & 1), static_cast<uint8_t>(rng() & 1)}});
        }
        EXPECT_NEAR(evaluate_pm(embed_classical(s, all), all), evaluate_classical(s, all).value(), 1e-15);
    }
    EXPECT_NEAR(evaluate_pm(embed_classical(best_three_bit_strategy(), all), all), 37.0 / 56.0, 1e-15);
}

TEST(EvaluatePM, RotationInvariance) {
    std::mt19937_64 rng(9);
    const FunctionSet set = resolve_labels(3, "k=5");
    for (int trial = 0; trial < 20; trial++) {
        PMStrategy s = random_strategy(set, rng);
        // Random rotation from a normalized quaternion.
        double q[4];
        std::normal_distribution<double> g;
        double len = 0;
        for (double &c : q) {
            c = g(rng);
            len += c * c;
        }
        len = std::sqrt(len);
        for (double &c : q) {
            c /= len;
        }
        const double w = q[0], a = q[1], b = q[2], c = q[3];
        Mat3 rot = {{{1 - 2 * (b * b + c * c), 2 * (a * b - c * w), 2 * (a * c + b * w)},
                     {2 * (a * b + c * w), 1 - 2 * (a * a + c * c), 2 * (b * c - a * w)},
                     {2 * (a * c - b * w), 2 * (b * c + a * w), 1 - 2 * (a * a + b * b)}}};
        PMStrategy r = s;
        for (auto &v : r.preparations) {
            v = apply_matrix(rot, v);
        }
        for (auto &v : r.measurements) {
            v = apply_matrix(rot, v);
        }
        EXPECT_NEAR(evaluate_pm(r, set), evaluate_pm(s, set), 1e-12);
    }
}

TEST(EvaluatePM, Validation) {
    const FunctionSet set = resolve_labels(3, "k=2");
    std::mt19937_64 rng(1);
    PMStrategy s = random_strategy(set, rng);
    s.preparations[0] = 2.0 * s.preparations[0];
    expect_code(ErrorCode::NotUnitVector, [&] { s.validate(set); });
    PMStrategy t = random_strategy(set, rng);
    expect_code(ErrorCode::MissingDecoding, [&] { t.validate(resolve_labels(3, "k=3")); });
    expect_code(ErrorCode::WidthMismatch, [&] { evaluate_pm(t, full_mubs(2)); });
}

TEST(Fixtures, FixturesEvaluateToClosedForms) {
    const double want[] = {0.853553, 0.788675, 0.788675, 0.741481, 0.723607, 0.723607, 0.704124};
    size_t i = 0;
    for (FixtureCase c : all_fixture_cases()) {
        Fixture fx = explicit_fixture(c);
        double v = evaluate_pm(fx.strategy, fx.set);
        EXPECT_NEAR(v, fx.expected, 1e-12) << fixture_case_name(c);
        EXPECT_NEAR(v, want[i++], 5e-7) << fixture_case_name(c);
        EXPECT_NEAR(v, oracle_success(fx.strategy, fx.set), 1e-12);
    }
    EXPECT_NEAR(explicit_fixture(FixtureCase::C).expected, kOpen4, 1e-15);
}

TEST(Fixtures, FixturesAreSeesawFixedPoints) {
    for (FixtureCase c : all_fixture_cases()) {
        Fixture fx = explicit_fixture(c);
        PMStrategy next = seesaw_step(fx.strategy, fx.set);
        for (size_t x = 0; x < next.preparations.size(); x++) {
            EXPECT_LT((next.preparations[x] - fx.strategy.preparations[x]).norm(), 1e-9) << fixture_case_name(c);
        }
        for (const auto &l : fx.set.labels()) {
            EXPECT_LT((next.measurement(l) - fx.strategy.measurement(l)).norm(), 1e-9) << fixture_case_name(c);
        }
    }
}

TEST(Fixtures, NamesRoundTrip) {
    for (FixtureCase c : all_fixture_cases()) {
        EXPECT_EQ(parse_fixture_case(fixture_case_name(c)), c);
    }
    expect_code(ErrorCode::UnknownCase, [] { parse_fixture_case("F"); });
}

TEST(Seesaw, ReachesReferenceValues) {
    struct Row {
        const char *labels;
        double want;
    };
    const Row rows[] = {
        {"k=2", norm_bound(2)}, {"k=3", norm_bound(3)}, {"100,010,110", norm_bound(3)},
        {"k=4:xor-closed", 0.75},   {"k=4:open", kOpen4},       {"k=5", norm_bound(5)},
        {"k=6", norm_bound(6)}, {"k=7", norm_bound(7)},
    };
    for (const auto &row : rows) {
        SeesawReport rep = seesaw(resolve_labels(3, row.labels));
        EXPECT_NEAR(rep.value, row.want, 1e-6) << row.labels;
        EXPECT_LE(rep.max_decrease, 1e-12) << row.labels;
        EXPECT_TRUE(rep.converged);
    }
    SeesawReport single = seesaw(resolve_labels(3, "k=1"));
    EXPECT_NEAR(single.value, 1.0, 1e-12);
}

TEST(Seesaw, NeverExceedsNormBoundNorFallsBelowClassical) {
    SeesawOptions opts;
    opts.restarts = 16;
    for (size_t k = 2; k <= 7; k++) {
        for (const auto &set : subsets_of_size(3, k)) {
            SeesawReport rep = seesaw(set, opts);
            EXPECT_LE(rep.value, norm_bound(k) + 1e-9) << set.to_string();
            EXPECT_GE(rep.value, classical_optimum(3, set, 1).value.value() - 1e-9) << set.to_string();
            EXPECT_LE(rep.max_decrease, 1e-12);
        }
    }
}

TEST(Seesaw, DeterministicAndThreadIndependent) {
    const FunctionSet set = resolve_labels(3, "k=6");
    SeesawOptions a;
    a.seed = 42;
    a.threads = 1;
    SeesawOptions b = a;
    b.threads = 4;
    SeesawReport ra = seesaw(set, a), rb = seesaw(set, b);
    EXPECT_EQ(ra.value, rb.value);
    EXPECT_EQ(ra.best_restart, rb.best_restart);
    EXPECT_EQ(ra.best_strategy.preparations, rb.best_strategy.preparations);
}

TEST(Seesaw, WarmStartFromClassicalNeverLosesIt) {
    const FunctionSet all = full_mubs(3);
    SeesawOptions opts;
    opts.restarts = 1;
    opts.warm_start = embed_classical(best_three_bit_strategy(), all);
    SeesawReport rep = seesaw(all, opts);
    EXPECT_GE(rep.value, 37.0 / 56.0 - 1e-12);
    EXPECT_EQ(rep.best_restart, 0);
}

TEST(Seesaw, BadOptions) {
    SeesawOptions opts;
    opts.restarts = 0;
    expect_code(ErrorCode::InvalidArgument, [&] { seesaw(full_mubs(3), opts); });
    opts.restarts = 1;
    opts.tol = 0.0;
    expect_code(ErrorCode::InvalidArgument, [&] { seesaw(full_mubs(3), opts); });
}

TEST(NormCancellation, IdentityHoldsForRandomMeasurements) {
    std::mt19937_64 rng(17);
    for (size_t k = 1; k <= 7; k++) {
        for (const auto &set : subsets_of_size(3, k)) {
            for (int trial = 0; trial < 100; trial++) {
                std::vector<BlochVector> v;
                for (size_t y = 0; y < k; y++) {
                    v.push_back(random_unit_vector(rng));
                }
                ASSERT_NEAR(norm_cancellation_check(set, v), 8.0 * static_cast<double>(k), 1e-9);
            }
        }
    }
    std::vector<BlochVector> two(2);
    expect_code(ErrorCode::CardinalityMismatch, [&] { norm_cancellation_check(full_mubs(3), two); });
}

TEST(NormBound, Values) {
    EXPECT_NEAR(norm_bound(2), 0.5 * (1 + 1 / std::sqrt(2.0)), 1e-15);
    EXPECT_DOUBLE_EQ(norm_bound(4), 0.75);
    EXPECT_DOUBLE_EQ(norm_bound(1), 1.0);
    expect_code(ErrorCode::InvalidArgument, [] { norm_bound(0); });
}

}  // namespace
}  // namespace grac
