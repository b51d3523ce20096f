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

#ifndef GRAC_NOISE_H
#define GRAC_NOISE_H

#include <string>
#include <vector>

#include "grac/channel.h"
#include "grac/classical.h"
#include "grac/quantum_pm.h"

namespace grac {

/// Noise level where the uniformly shrunk optimal quantum strategy,
/// 1/2 + (1 - lambda)(S_Q - 1/2), drops to the classical optimum. Zero when
/// there is no quantum advantage to begin with.
double critical_depolarizing(const Rational &classical, double quantum);

/// Same, computing S_C exhaustively and S_Q with the see-saw.
double critical_depolarizing(const FunctionSet &set, const SeesawOptions &options = {});

struct SweepOptions {
    SeesawOptions seesaw;
    /// Cold restarts at grid points after the first; the previous point's
    /// optimum is always added as a warm start.
    int warm_restarts = 8;
};

struct SweepResult {
    ChannelKind kind = ChannelKind::Dephasing;
    BlochVector axis;
    std::vector<double> grid;
    std::vector<double> values;
    Rational classical;
    std::vector<double> ratio;
    std::vector<PMStrategy> strategies;

    /// Header `lambda,one_minus_lambda,quantum_value,classical_value,ratio`.
    std::string to_csv() const;
};

/// `points` evenly spaced noise values from 0 to the kind's maximum.
std::vector<double> uniform_grid(ChannelKind kind, size_t points = 101);

/// Re-optimizes the see-saw with the channel folded into the objective at
/// every grid value. The grid must be ascending and inside the valid range.
SweepResult channel_sweep(const FunctionSet &set, ChannelKind kind, const BlochVector &axis,
                          const std::vector<double> &grid, const SweepOptions &options = {});

SweepResult dephasing_sweep(const FunctionSet &set, const BlochVector &axis, const std::vector<double> &grid,
                            const SweepOptions &options = {});

struct CrossingWindow {
    /// Interval in 1 - lambda.
    double low = 0.0;
    double high = 0.0;
    double tol = 0.0;
};

/// Largest interval of 1 - lambda on which the optimized dephased value of
/// `a` exceeds that of `b`. Interior endpoints are bisected down to
/// `refine_tol` in lambda. Throws NoCrossing when either curve dominates
/// on the whole grid.
CrossingWindow crossing_window(const FunctionSet &a, const FunctionSet &b, const BlochVector &axis,
                               const std::vector<double> &grid, double refine_tol = 1e-4,
                               const SweepOptions &options = {});

}  // namespace grac

#endif  // GRAC_NOISE_H
