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

#include "grac/quantum_pm.h"

#include <algorithm>
#include <cmath>

#include "grac/error.h"
#include "parallel.h"

namespace grac {

namespace {

constexpr double kZeroVector = 1e-12;

// Dense working form of a strategy aligned with one question set.
struct Workspace {
    size_t num_x;
    size_t k;
    std::vector<int8_t> g;  // [x][y]
    Mat3 d;
    std::vector<BlochVector> r;
    std::vector<BlochVector> v;

    Workspace(const FunctionSet &set, const std::optional<BlochMap> &channel)
        : num_x(set.num_inputs()),
          k(set.size()),
          g(sign_table(set)),
          d(channel ? channel->matrix() : identity3()),
          r(num_x),
          v(k) {
    }

    // sum_{x,y} g (D r_x) . v_y
    double objective() const {
        double total = 0.0;
        for (size_t y = 0; y < k; y++) {
            BlochVector dv = apply_transpose(d, v[y]);
            for (size_t x = 0; x < num_x; x++) {
                total += g[x * k + y] * r[x].dot(dv);
            }
        }
        return total;
    }

    double success(double phi) const {
        return 0.5 * (1.0 + phi / static_cast<double>(num_x * k));
    }

    void update_preparations() {
        for (size_t x = 0; x < num_x; x++) {
            BlochVector big_v;
            for (size_t y = 0; y < k; y++) {
                big_v += static_cast<double>(g[x * k + y]) * v[y];
            }
            BlochVector target = apply_transpose(d, big_v);
            double len = target.norm();
            if (len >= kZeroVector) {
                r[x] = (1.0 / len) * target;
            }
        }
    }

    void update_measurements() {
        std::vector<BlochVector> dr(num_x);
        for (size_t x = 0; x < num_x; x++) {
            dr[x] = apply_matrix(d, r[x]);
        }
        for (size_t y = 0; y < k; y++) {
            BlochVector w;
            for (size_t x = 0; x < num_x; x++) {
                w += static_cast<double>(g[x * k + y]) * dr[x];
            }
            double len = w.norm();
            if (len >= kZeroVector) {
                v[y] = (1.0 / len) * w;
            }
        }
    }

    void load(const PMStrategy &s, const FunctionSet &set) {
        s.validate(set, 1e-9);
        r = s.preparations;
        for (size_t y = 0; y < k; y++) {
            v[y] = s.measurement(set[y]);
        }
    }

    PMStrategy to_strategy(const FunctionSet &set) const {
        PMStrategy s;
        s.n = set.width();
        s.preparations = r;
        s.labels.assign(set.labels().begin(), set.labels().end());
        s.measurements = v;
        return s;
    }
};

struct RestartResult {
    PMStrategy strategy;
    double value = -1.0;
    int iterations = 0;
    bool converged = false;
    double max_decrease = 0.0;
};

}  // namespace

const BlochVector &PMStrategy::measurement(const ParityLabel &y) const {
    for (size_t i = 0; i < labels.size(); i++) {
        if (labels[i] == y) {
            return measurements[i];
        }
    }
    throw Error(ErrorCode::MissingDecoding, "no measurement for label " + y.to_string());
}

void PMStrategy::validate(const FunctionSet &set, double tol) const {
    if (n != set.width()) {
        throw Error(ErrorCode::WidthMismatch, "strategy width " + std::to_string(n) + " vs set width " +
                                                  std::to_string(set.width()));
    }
    if (preparations.size() != set.num_inputs()) {
        throw Error(ErrorCode::InvalidArgument, "strategy must prepare a state for every input");
    }
    if (labels.size() != measurements.size()) {
        throw Error(ErrorCode::InvalidArgument, "labels and measurements differ in length");
    }
    for (const auto &label : set.labels()) {
        measurement(label);
    }
    for (const auto &r : preparations) {
        if (!r.is_unit(tol)) {
            throw Error(ErrorCode::NotUnitVector, "preparation Bloch vector is not unit length");
        }
    }
    for (const auto &v : measurements) {
        if (!v.is_unit(tol)) {
            throw Error(ErrorCode::NotUnitVector, "measurement direction is not unit length");
        }
    }
}

double evaluate_pm(const PMStrategy &strategy, const FunctionSet &set, const std::optional<BlochMap> &channel) {
    if (strategy.n != set.width() || strategy.preparations.size() != set.num_inputs()) {
        throw Error(ErrorCode::WidthMismatch, "strategy does not match the question width");
    }
    double total = 0.0;
    for (const auto &label : set.labels()) {
        const BlochVector &v = strategy.measurement(label);
        for (uint32_t x = 0; x < set.num_inputs(); x++) {
            BlochVector r = channel ? channel->apply(strategy.preparations[x]) : strategy.preparations[x];
            double sign = label.eval(x) ? -1.0 : 1.0;
            total += 0.5 * (1.0 + sign * r.dot(v));
        }
    }
    return total / static_cast<double>(set.num_inputs() * set.size());
}

PMStrategy embed_classical(const ClassicalStrategy &strategy, const FunctionSet &set) {
    if (strategy.encoding.width() != set.width()) {
        throw Error(ErrorCode::WidthMismatch, "encoding width differs from set width");
    }
    const BlochVector ez{{0, 0, 1}}, ex{{1, 0, 0}};
    PMStrategy s;
    s.n = set.width();
    for (uint32_t x = 0; x < set.num_inputs(); x++) {
        s.preparations.push_back(strategy.encoding(x) ? -ez : ez);
    }
    for (const auto &label : set.labels()) {
        uint8_t z0 = strategy.decode(label, false);
        uint8_t z1 = strategy.decode(label, true);
        s.labels.push_back(label);
        if (z0 == z1) {
            s.measurements.push_back(ex);
        } else {
            s.measurements.push_back(z0 ? -ez : ez);
        }
    }
    return s;
}

PMStrategy seesaw_step(const PMStrategy &strategy, const FunctionSet &set, const std::optional<BlochMap> &channel) {
    Workspace ws(set, channel);
    ws.load(strategy, set);
    ws.update_preparations();
    ws.update_measurements();
    return ws.to_strategy(set);
}

SeesawReport seesaw(const FunctionSet &set, const SeesawOptions &options) {
    if (options.restarts < 1) {
        throw Error(ErrorCode::InvalidArgument, "seesaw needs at least one restart");
    }
    if (!(options.tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "seesaw tolerance must be positive");
    }
    if (options.max_iters < 1) {
        throw Error(ErrorCode::InvalidArgument, "seesaw needs max_iters >= 1");
    }
    if (options.warm_start) {
        options.warm_start->validate(set, 1e-9);
    }

    std::vector<RestartResult> results(static_cast<size_t>(options.restarts));
    internal::parallel_for(results.size(), options.threads, [&](size_t restart) {
        Workspace ws(set, options.channel);
        if (restart == 0 && options.warm_start) {
            ws.load(*options.warm_start, set);
        } else {
            auto rng = internal::substream(options.seed, restart);
            for (auto &r : ws.r) {
                r = random_unit_vector(rng);
            }
            for (auto &v : ws.v) {
                v = random_unit_vector(rng);
            }
        }
        RestartResult &out = results[restart];
        double phi = ws.objective();
        auto track = [&](double next) {
            out.max_decrease = std::max(out.max_decrease, phi - next);
            phi = next;
        };
        for (int it = 1; it <= options.max_iters; it++) {
            double before = phi;
            ws.update_preparations();
            track(ws.objective());
            ws.update_measurements();
            track(ws.objective());
            out.iterations = it;
            if (ws.success(phi) - ws.success(before) < options.tol) {
                out.converged = true;
                break;
            }
        }
        out.strategy = ws.to_strategy(set);
        out.value = ws.success(phi);
        // Report the drop in success-probability units.
        out.max_decrease /= 2.0 * static_cast<double>(ws.num_x * ws.k);
    });

    SeesawReport report;
    report.seed = options.seed;
    report.restarts_used = options.restarts;
    size_t best = 0;
    for (size_t i = 0; i < results.size(); i++) {
        report.max_decrease = std::max(report.max_decrease, results[i].max_decrease);
        if (results[i].value > results[best].value) {
            best = i;
        }
    }
    report.best_restart = static_cast<int>(best);
    report.iterations = results[best].iterations;
    report.converged = results[best].converged;
    report.best_strategy = std::move(results[best].strategy);
    report.value = evaluate_pm(report.best_strategy, set, options.channel);
    return report;
}

double norm_bound(size_t k) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidArgument, "bound needs at least one question");
    }
    return 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(k)));
}

double norm_cancellation_check(const FunctionSet &set, std::span<const BlochVector> measurements) {
    if (measurements.size() != set.size()) {
        throw Error(ErrorCode::CardinalityMismatch, "need one measurement per question");
    }
    double total = 0.0;
    for (uint32_t x = 0; x < set.num_inputs(); x++) {
        BlochVector sum;
        for (size_t y = 0; y < set.size(); y++) {
            sum += (set[y].eval(x) ? -1.0 : 1.0) * measurements[y];
        }
        total += sum.dot(sum);
    }
    return total;
}

}  // namespace grac
