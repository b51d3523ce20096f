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

#ifndef GRAC_QUANTUM_PM_H
#define GRAC_QUANTUM_PM_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "grac/bloch.h"
#include "grac/boolean_fn.h"
#include "grac/channel.h"
#include "grac/classical.h"

namespace grac {

/// Qubit prepare-and-measure strategy in Bloch form. `preparations[x]` is the
/// state sent on input x; `measurements[i]` is the direction measured for
/// `labels[i]`, outcome +1 read as z = 0.
struct PMStrategy {
    int n = 0;
    std::vector<BlochVector> preparations;
    std::vector<ParityLabel> labels;
    std::vector<BlochVector> measurements;

    const BlochVector &measurement(const ParityLabel &y) const;
    /// Throws WidthMismatch, MissingDecoding or NotUnitVector.
    void validate(const FunctionSet &set, double tol = 1e-12) const;
};

/// Average success of `strategy` on `set`. With a channel, Bob receives the
/// image of each preparation under the map.
double evaluate_pm(const PMStrategy &strategy, const FunctionSet &set,
                   const std::optional<BlochMap> &channel = std::nullopt);

/// Antipodal embedding of a deterministic strategy: r_x = (-1)^omega e_z and
/// v_y = (-1)^c e_z when z = omega XOR c. Constant guesses map to e_x, which
/// scores 1/2 on a balanced question just like the constant guess does.
PMStrategy embed_classical(const ClassicalStrategy &strategy, const FunctionSet &set);

struct SeesawOptions {
    int restarts = 64;
    int max_iters = 10000;
    double tol = 1e-10;
    uint64_t seed = 0;
    std::optional<BlochMap> channel;
    /// Used as restart 0 when present.
    std::optional<PMStrategy> warm_start;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct SeesawReport {
    double value = 0.0;
    /// Full iterations taken by the winning restart.
    int iterations = 0;
    int restarts_used = 0;
    bool converged = false;
    PMStrategy best_strategy;
    uint64_t seed = 0;
    int best_restart = 0;
    /// Largest objective drop seen on any half-step of any restart.
    double max_decrease = 0.0;
};

/// One closed-form alternation: r_x <- D V_x / |D V_x| then
/// v_y <- sum_x g_y(x) D r_x / |.|; vectors whose update would be shorter than
/// 1e-12 keep their previous value.
PMStrategy seesaw_step(const PMStrategy &strategy, const FunctionSet &set,
                       const std::optional<BlochMap> &channel = std::nullopt);

SeesawReport seesaw(const FunctionSet &set, const SeesawOptions &options = {});

/// (1 + 1/sqrt(k)) / 2.
double norm_bound(size_t k);

/// sum_x |sum_y g_y(x) v_y|^2 with `measurements` aligned to `set`.
double norm_cancellation_check(const FunctionSet &set, std::span<const BlochVector> measurements);

/// Uniform point on the sphere.
template <typename Rng>
BlochVector random_unit_vector(Rng &rng);

enum class FixtureCase { A, B1, B2, C, DBox, DPlanar, E };

std::string_view fixture_case_name(FixtureCase c);
FixtureCase parse_fixture_case(std::string_view s);
std::vector<FixtureCase> all_fixture_cases();

struct Fixture {
    FixtureCase which;
    FunctionSet set;
    PMStrategy strategy;
    /// Closed-form success of the protocol.
    double expected;
};

Fixture explicit_fixture(FixtureCase c);

template <typename Rng>
BlochVector random_unit_vector(Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        BlochVector v{{gauss(rng), gauss(rng), gauss(rng)}};
        double len = v.norm();
        if (len > 1e-9) {
            return (1.0 / len) * v;
        }
    }
}

}  // namespace grac

#endif  // GRAC_QUANTUM_PM_H
