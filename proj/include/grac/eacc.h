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

#ifndef GRAC_EACC_H
#define GRAC_EACC_H

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "grac/boolean_fn.h"
#include "grac/classical.h"

namespace grac {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kOperatorTol = 1e-10;

/// Throws InvalidState unless `m` is square and Hermitian within `tol`.
void check_hermitian(const CMatrix &m, double tol = kOperatorTol);
/// Throws InvalidState unless `rho` is Hermitian, PSD and of unit trace.
void check_state(const CMatrix &rho, double tol = kOperatorTol);

/// Two-outcome POVM; effects[z] is the effect for outcome z.
struct BinaryMeasurement {
    std::array<CMatrix, 2> effects;

    /// {P, I - P}.
    static BinaryMeasurement from_effect0(const CMatrix &effect0);
    int dim() const {
        return static_cast<int>(effects[0].rows());
    }
    /// Throws InvalidEffect unless both effects are PSD and sum to identity.
    void validate(double tol = kOperatorTol) const;
};

/// Shared state on A (x) B (Alice slot first, row-major Kronecker order),
/// Alice's measurement per input x producing the bit omega, and Bob's
/// measurement per (omega, question).
struct EACCStrategy {
    int n = 0;
    int local_dim = 2;
    CMatrix state;
    std::vector<BinaryMeasurement> alice;  // [x]
    std::vector<ParityLabel> labels;
    std::vector<std::array<BinaryMeasurement, 2>> bob;  // [label index][omega]

    const BinaryMeasurement &bob_measurement(bool omega, const ParityLabel &y) const;
    /// Throws DimensionMismatch, MissingDecoding, InvalidState or InvalidEffect.
    void validate(const FunctionSet &set, double tol = kOperatorTol) const;
};

/// Row-major Kronecker product a (x) b.
CMatrix kron(const CMatrix &a, const CMatrix &b);

double evaluate_eacc(const EACCStrategy &strategy, const FunctionSet &set);

struct EACCSeesawOptions {
    int local_dim = 2;
    int restarts = 32;
    int max_iters = 5000;
    double tol = 1e-12;
    uint64_t seed = 0;
    unsigned threads = 0;
};

struct EACCSeesawReport {
    double value = 0.0;
    EACCStrategy best_strategy;
    int iterations = 0;
    int best_restart = 0;
    bool converged = false;
    uint64_t seed = 0;
    /// Largest objective drop on any sub-step of any restart.
    double max_decrease = 0.0;
    /// Largest |E_0 + E_1 - I| seen after any sub-step.
    double max_completeness_error = 0.0;
};

inline constexpr int kMaxLocalDim = 4;

/// Alternates a pure-state step (top eigenvector), an Alice step and a Bob
/// step; each measurement step splits an operator difference into its
/// nonnegative (outcome 0) and negative eigenspaces.
EACCSeesawReport eacc_seesaw(const FunctionSet &set, const EACCSeesawOptions &options = {});

struct BellValueReport {
    double bell_value = 0.0;
    double eacc_value = 0.0;
};

/// Reads the strategy as a Bell scenario: Alice outputs u on input x, Bob
/// outputs v on inputs (y_0, y), and the functional rewards u = y_0 together
/// with v = f_y(x).
BellValueReport eacc_to_bell(const EACCStrategy &strategy, const FunctionSet &set);

/// Product state |0><0| (x) |0><0| with diagonal 0/I effects reproducing a
/// deterministic strategy.
EACCStrategy embed_classical_eacc(const ClassicalStrategy &strategy, const FunctionSet &set, int local_dim = 2);

/// Haar-distributed unitary.
CMatrix random_unitary(int dim, std::mt19937_64 &rng);

/// Random mixed state and random (generally non-projective) effects.
EACCStrategy random_eacc_strategy(const FunctionSet &set, int local_dim, std::mt19937_64 &rng);

}  // namespace grac

#endif  // GRAC_EACC_H
