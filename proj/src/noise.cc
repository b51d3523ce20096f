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

#include "grac/noise.h"

#include <algorithm>
#include <cstdio>

#include "grac/error.h"

namespace grac {

namespace {

// Curves closer than this count as equal when looking for a crossing.
constexpr double kCrossingMargin = 1e-9;

uint64_t point_seed(uint64_t seed, size_t index) {
    return seed * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull * (index + 1);
}

SeesawReport optimize_at(const FunctionSet &set, ChannelKind kind, const BlochVector &axis, double lambda,
                         const SeesawOptions &base, int restarts, uint64_t seed,
                         const std::optional<PMStrategy> &warm) {
    SeesawOptions opts = base;
    opts.channel = BlochMap::make(kind, lambda, axis);
    opts.seed = seed;
    opts.warm_start = warm;
    opts.restarts = restarts + (warm ? 1 : 0);
    return seesaw(set, opts);
}

}  // namespace

double critical_depolarizing(const Rational &classical, double quantum) {
    double gap_q = quantum - 0.5;
    double gap_c = classical.value() - 0.5;
    if (quantum <= classical.value() || gap_q <= 0.0) {
        return 0.0;
    }
    return 1.0 - gap_c / gap_q;
}

double critical_depolarizing(const FunctionSet &set, const SeesawOptions &options) {
    Rational sc = classical_optimum(set.width(), set, 1).value;
    double sq = seesaw(set, options).value;
    return critical_depolarizing(sc, sq);
}

std::string SweepResult::to_csv() const {
    std::string out = "lambda,one_minus_lambda,quantum_value,classical_value,ratio\n";
    char buf[256];
    for (size_t i = 0; i < grid.size(); i++) {
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.12f,%.12f,%.12f\n", grid[i], 1.0 - grid[i], values[i],
                      classical.value(), ratio[i]);
        out += buf;
    }
    return out;
}

std::vector<double> uniform_grid(ChannelKind kind, size_t points) {
    if (points < 2) {
        throw Error(ErrorCode::InvalidArgument, "grid needs at least two points");
    }
    double hi = BlochMap::max_lambda(kind);
    std::vector<double> grid(points);
    for (size_t i = 0; i < points; i++) {
        grid[i] = hi * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

SweepResult channel_sweep(const FunctionSet &set, ChannelKind kind, const BlochVector &axis,
                          const std::vector<double> &grid, const SweepOptions &options) {
    if (grid.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty noise grid");
    }
    for (size_t i = 0; i < grid.size(); i++) {
        if (grid[i] < 0.0 || grid[i] > BlochMap::max_lambda(kind)) {
            throw Error(ErrorCode::InvalidChannel, "grid value " + std::to_string(grid[i]) + " out of range");
        }
        if (i && grid[i] <= grid[i - 1]) {
            throw Error(ErrorCode::InvalidArgument, "noise grid must be strictly ascending");
        }
    }
    SweepResult out;
    out.kind = kind;
    out.axis = axis;
    out.grid = grid;
    out.classical = classical_optimum(set.width(), set, 1).value;

    std::optional<PMStrategy> warm;
    for (size_t i = 0; i < grid.size(); i++) {
        int restarts = warm ? std::max(1, options.warm_restarts) : options.seesaw.restarts;
        SeesawReport rep = optimize_at(set, kind, axis, grid[i], options.seesaw, restarts,
                                       point_seed(options.seesaw.seed, i), warm);
        out.values.push_back(rep.value);
        out.ratio.push_back(rep.value / out.classical.value());
        out.strategies.push_back(rep.best_strategy);
        warm = rep.best_strategy;
    }
    return out;
}

SweepResult dephasing_sweep(const FunctionSet &set, const BlochVector &axis, const std::vector<double> &grid,
                            const SweepOptions &options) {
    return channel_sweep(set, ChannelKind::Dephasing, axis, grid, options);
}

CrossingWindow crossing_window(const FunctionSet &a, const FunctionSet &b, const BlochVector &axis,
                               const std::vector<double> &grid, double refine_tol, const SweepOptions &options) {
    if (!(refine_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "refine_tol must be positive");
    }
    const ChannelKind kind = ChannelKind::Dephasing;
    SweepResult sa = channel_sweep(a, kind, axis, grid, options);
    SweepResult sb = channel_sweep(b, kind, axis, grid, options);

    std::vector<bool> ahead(grid.size());
    for (size_t i = 0; i < grid.size(); i++) {
        ahead[i] = sa.values[i] - sb.values[i] > kCrossingMargin;
    }
    // Longest run of grid points where a is ahead, measured in lambda.
    size_t best_lo = 0, best_hi = 0;
    double best_len = -1.0;
    for (size_t i = 0; i < grid.size();) {
        if (!ahead[i]) {
            i++;
            continue;
        }
        size_t j = i;
        while (j + 1 < grid.size() && ahead[j + 1]) {
            j++;
        }
        double len = grid[j] - grid[i];
        if (len > best_len) {
            best_len = len;
            best_lo = i;
            best_hi = j;
        }
        i = j + 1;
    }
    if (best_len < 0.0) {
        throw Error(ErrorCode::NoCrossing, "first set never exceeds the second on the grid");
    }
    if (best_lo == 0 && best_hi + 1 == grid.size()) {
        throw Error(ErrorCode::NoCrossing, "first set exceeds the second on the whole grid");
    }

    uint64_t bisect_seed = point_seed(options.seesaw.seed, grid.size());
    auto is_ahead = [&](double lambda, size_t warm_index) {
        double va = optimize_at(a, kind, axis, lambda, options.seesaw, options.seesaw.restarts, bisect_seed,
                                sa.strategies[warm_index])
                        .value;
        double vb = optimize_at(b, kind, axis, lambda, options.seesaw, options.seesaw.restarts, bisect_seed,
                                sb.strategies[warm_index])
                        .value;
        return va - vb > kCrossingMargin;
    };
    // Bisects between an "ahead" grid value and a "behind" one.
    auto refine = [&](double in, double out, size_t warm_index) {
        while (std::abs(in - out) > refine_tol) {
            double mid = 0.5 * (in + out);
            if (is_ahead(mid, warm_index)) {
                in = mid;
            } else {
                out = mid;
            }
        }
        return 0.5 * (in + out);
    };

    double lambda_lo = best_lo == 0 ? grid.front() : refine(grid[best_lo], grid[best_lo - 1], best_lo);
    double lambda_hi = best_hi + 1 == grid.size() ? grid.back() : refine(grid[best_hi], grid[best_hi + 1], best_hi);
    return CrossingWindow{1.0 - lambda_hi, 1.0 - lambda_lo, refine_tol};
}

}  // namespace grac
