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
#include "grac/noise.h"
#include "grac/report.h"
#include "oracles.h"

namespace grac {
namespace {

const BlochVector kX{{1, 0, 0}};

TEST(BlochMap, MatchesKrausOracle) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; trial++) {
        BlochVector r = random_unit_vector(rng);
        double depol = unit(rng);
        BlochVector got = BlochMap::depolarizing(depol).apply(r);
        double want[3];
        oracle::bloch_of(oracle::depolarize(oracle::density(r.c.data()), depol), want);
        for (int i = 0; i < 3; i++) {
            ASSERT_NEAR(got[static_cast<size_t>(i)], want[i], 1e-14);
        }
        BlochVector axis = random_unit_vector(rng);
        double deph = 0.5 * unit(rng);
        got = BlochMap::dephasing(deph, axis).apply(r);
        oracle::bloch_of(oracle::dephase(oracle::density(r.c.data()), deph, axis.c.data()), want);
        for (int i = 0; i < 3; i++) {
            ASSERT_NEAR(got[static_cast<size_t>(i)], want[i], 1e-14);
        }
    }
}

TEST(BlochMap, Edges) {
    BlochVector r{{0.6, 0.0, 0.8}};
    EXPECT_EQ(BlochMap::depolarizing(0.0).apply(r), r);
    EXPECT_EQ(BlochMap::depolarizing(1.0).apply(r), BlochVector{});
    // Full dephasing keeps only the axis component.
    BlochVector kept = BlochMap::dephasing(0.5, kX).apply(r);
    EXPECT_NEAR(kept[0], 0.6, 1e-15);
    EXPECT_NEAR(kept[2], 0.0, 1e-15);
    EXPECT_EQ(BlochMap::identity().apply(r), r);
    EXPECT_DOUBLE_EQ(BlochMap::max_lambda(ChannelKind::Depolarizing), 1.0);
    EXPECT_DOUBLE_EQ(BlochMap::max_lambda(ChannelKind::Dephasing), 0.5);
}

TEST(BlochMap, Errors) {
    expect_code(ErrorCode::InvalidChannel, [] { BlochMap::depolarizing(1.5); });
    expect_code(ErrorCode::InvalidChannel, [] { BlochMap::depolarizing(-0.1); });
    expect_code(ErrorCode::InvalidChannel, [] { BlochMap::dephasing(0.6, kX); });
    expect_code(ErrorCode::NotUnitVector, [] { BlochMap::dephasing(0.1, BlochVector{{1, 1, 0}}); });
    expect_code(ErrorCode::InvalidChannel, [] { parse_channel_kind("amplitude-damping"); });
    EXPECT_EQ(parse_channel_kind("dephasing"), ChannelKind::Dephasing);
    EXPECT_EQ(parse_channel_kind(channel_kind_name(ChannelKind::Depolarizing)), ChannelKind::Depolarizing);
}

TEST(Depolarizing, FixedStrategyShrinksLinearly) {
    for (FixtureCase c : all_fixture_cases()) {
        Fixture fx = explicit_fixture(c);
        double s0 = evaluate_pm(fx.strategy, fx.set);
        for (int i = 0; i <= 20; i++) {
            double l = i / 20.0;
            double s = evaluate_pm(fx.strategy, fx.set, BlochMap::depolarizing(l));
            ASSERT_NEAR(s, 0.5 + (1.0 - l) * (s0 - 0.5), 1e-12);
        }
    }
}

TEST(Depolarizing, CriticalNoise) {
    EXPECT_DOUBLE_EQ(critical_depolarizing(Rational{3, 4}, 0.75), 0.0);
    EXPECT_DOUBLE_EQ(critical_depolarizing(Rational{3, 4}, 0.7), 0.0);
    EXPECT_NEAR(critical_depolarizing(Rational{3, 4}, norm_bound(2)), 1.0 - 1.0 / std::sqrt(2.0), 1e-15);
    // Closed forms for the canonical sets.
    const double open4 = 0.5 * (1.0 + (std::sqrt(2.0) + std::sqrt(6.0)) / 8.0);
    struct Row {
        const char *labels;
        double want;
    };
    const Row rows[] = {
        {"k=2", 1 - 0.25 / (norm_bound(2) - 0.5)}, {"k=3", 1 - 0.25 / (norm_bound(3) - 0.5)},
        {"k=4:open", 1 - 0.1875 / (open4 - 0.5)},      {"k=5", 1 - 0.2 / (norm_bound(5) - 0.5)},
        {"k=6", 1 - (1.0 / 6) / (norm_bound(6) - 0.5)}, {"k=7", 1 - (9.0 / 56) / (norm_bound(7) - 0.5)},
    };
    for (const auto &row : rows) {
        EXPECT_NEAR(critical_depolarizing(resolve_labels(3, row.labels)), row.want, 1e-6) << row.labels;
    }
    EXPECT_DOUBLE_EQ(critical_depolarizing(resolve_labels(3, "k=4:xor-closed")), 0.0);
}

TEST(Sweep, GridAndCsv) {
    auto grid = uniform_grid(ChannelKind::Dephasing, 11);
    ASSERT_EQ(grid.size(), 11u);
    EXPECT_DOUBLE_EQ(grid.front(), 0.0);
    EXPECT_DOUBLE_EQ(grid.back(), 0.5);
    expect_code(ErrorCode::InvalidArgument, [] { uniform_grid(ChannelKind::Dephasing, 1); });

    SweepResult sw = dephasing_sweep(resolve_labels(3, "k=2"), kX, grid);
    std::string csv = sw.to_csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "lambda,one_minus_lambda,quantum_value,classical_value,ratio");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
    EXPECT_EQ(sw.values.size(), 11u);
    EXPECT_EQ(sw.strategies.size(), 11u);
}

TEST(Sweep, RejectsBadGrids) {
    const FunctionSet set = resolve_labels(3, "k=2");
    expect_code(ErrorCode::InvalidChannel, [&] { dephasing_sweep(set, kX, {0.0, 0.7}); });
    expect_code(ErrorCode::InvalidArgument, [&] { dephasing_sweep(set, kX, {0.2, 0.1}); });
    expect_code(ErrorCode::InvalidArgument, [&] { dephasing_sweep(set, kX, {}); });
}

TEST(Sweep, ValuesNonincreasingAndEndAtClassical) {
    auto grid = uniform_grid(ChannelKind::Dephasing, 26);
    for (const char *labels : {"k=2", "k=3", "k=4:open", "k=5", "k=7"}) {
        const FunctionSet set = resolve_labels(3, labels);
        SweepResult sw = dephasing_sweep(set, kX, grid);
        for (size_t i = 1; i < sw.values.size(); i++) {
            EXPECT_LE(sw.values[i], sw.values[i - 1] + 1e-8) << labels << " at " << grid[i];
        }
        // Full dephasing leaves one classical bit along the axis.
        EXPECT_NEAR(sw.values.back(), sw.classical.value(), 1e-8) << labels;
        EXPECT_NEAR(sw.ratio.front(), sw.values.front() / sw.classical.value(), 1e-15);
    }
}

TEST(Sweep, DepolarizingSweepIsLinearInNoise) {
    const FunctionSet set = resolve_labels(3, "k=3");
    auto grid = uniform_grid(ChannelKind::Depolarizing, 11);
    SweepResult sw = channel_sweep(set, ChannelKind::Depolarizing, kX, grid);
    for (size_t i = 0; i < grid.size(); i++) {
        EXPECT_NEAR(sw.values[i], 0.5 + (1 - grid[i]) * (norm_bound(3) - 0.5), 1e-8);
    }
}

TEST(Crossing, QuintupleAheadOfOpenQuadrupleAtStrongDephasing) {
    CrossingWindow w = crossing_window(resolve_labels(3, "k=5"), resolve_labels(3, "k=4:open"), kX,
                                       uniform_grid(ChannelKind::Dephasing, 101));
    EXPECT_NEAR(w.low, 0.5, 0.01);
    EXPECT_NEAR(w.high, 0.871, 0.01);
    EXPECT_DOUBLE_EQ(w.tol, 1e-4);
}

TEST(Crossing, NoCrossingWhenOneSideDominates) {
    auto grid = uniform_grid(ChannelKind::Dephasing, 11);
    // The pair is ahead of the full set everywhere.
    expect_code(ErrorCode::NoCrossing,
                [&] { crossing_window(resolve_labels(3, "k=2"), resolve_labels(3, "k=7"), kX, grid); });
    expect_code(ErrorCode::NoCrossing,
                [&] { crossing_window(resolve_labels(3, "k=7"), resolve_labels(3, "k=2"), kX, grid); });
}

}  // namespace
}  // namespace grac
