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

#include "grac/eacc.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "grac/error.h"
#include "parallel.h"

namespace grac {

namespace {

using cd = std::complex<double>;

// Eigenvalues at or above this go to outcome 0.
constexpr double kTieTol = 1e-12;

double min_eigenvalue(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Projector onto the span of eigenvectors of `m` with eigenvalue >= -kTieTol.
CMatrix nonnegative_projector(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
    CMatrix p = CMatrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        if (es.eigenvalues()(i) >= -kTieTol) {
            const auto col = es.eigenvectors().col(i);
            p += col * col.adjoint();
        }
    }
    return p;
}

// Tr_B[rho (I (x) b)] for rho on dA*dB.
CMatrix contract_bob(const CMatrix &rho, const CMatrix &b, int da, int db) {
    CMatrix out = CMatrix::Zero(da, da);
    for (int j = 0; j < da; j++) {
        for (int i = 0; i < da; i++) {
            cd acc = 0.0;
            for (int l = 0; l < db; l++) {
                for (int k = 0; k < db; k++) {
                    acc += rho(j * db + l, i * db + k) * b(k, l);
                }
            }
            out(j, i) = acc;
        }
    }
    return out;
}

// Tr_A[rho (a (x) I)].
CMatrix contract_alice(const CMatrix &rho, const CMatrix &a, int da, int db) {
    CMatrix out = CMatrix::Zero(db, db);
    for (int l = 0; l < db; l++) {
        for (int k = 0; k < db; k++) {
            cd acc = 0.0;
            for (int j = 0; j < da; j++) {
                for (int i = 0; i < da; i++) {
                    acc += rho(j * db + l, i * db + k) * a(i, j);
                }
            }
            out(l, k) = acc;
        }
    }
    return out;
}

double trace_product(const CMatrix &a, const CMatrix &b) {
    // Tr(ab) without forming the product.
    return (a.transpose().cwiseProduct(b)).sum().real();
}

double completeness_error(const BinaryMeasurement &m) {
    CMatrix diff = m.effects[0] + m.effects[1] - CMatrix::Identity(m.dim(), m.dim());
    return diff.cwiseAbs().maxCoeff();
}

// Dense see-saw state for one restart.
struct EACCWorkspace {
    const FunctionSet &set;
    int d;
    size_t num_x;
    size_t k;
    CMatrix rho;
    std::vector<BinaryMeasurement> alice;
    std::vector<std::array<BinaryMeasurement, 2>> bob;

    EACCWorkspace(const FunctionSet &s, int dim) : set(s), d(dim), num_x(s.num_inputs()), k(s.size()) {
    }

    double norm() const {
        return static_cast<double>(num_x * k);
    }

    // Sum over x, omega, y of A^x_omega (x) B^{omega,y}_{f_y(x)}.
    CMatrix bell_operator() const {
        CMatrix w = CMatrix::Zero(d * d, d * d);
        for (size_t x = 0; x < num_x; x++) {
            for (int omega = 0; omega < 2; omega++) {
                CMatrix bob_sum = CMatrix::Zero(d, d);
                for (size_t y = 0; y < k; y++) {
                    bob_sum += bob[y][omega].effects[set[y].eval(static_cast<uint32_t>(x))];
                }
                w += kron(alice[x].effects[omega], bob_sum);
            }
        }
        return w;
    }

    double objective() const {
        return trace_product(rho, bell_operator()) / norm();
    }

    void state_step() {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(bell_operator());
        CVector top = es.eigenvectors().col(d * d - 1);
        rho = top * top.adjoint();
    }

    void alice_step() {
        for (size_t x = 0; x < num_x; x++) {
            std::array<CMatrix, 2> kx;
            for (int omega = 0; omega < 2; omega++) {
                CMatrix bob_sum = CMatrix::Zero(d, d);
                for (size_t y = 0; y < k; y++) {
                    bob_sum += bob[y][omega].effects[set[y].eval(static_cast<uint32_t>(x))];
                }
                kx[omega] = contract_bob(rho, bob_sum, d, d);
            }
            alice[x] = BinaryMeasurement::from_effect0(nonnegative_projector(kx[0] - kx[1]));
        }
    }

    void bob_step() {
        // Alice's marginal contractions are shared across questions.
        std::vector<std::array<CMatrix, 2>> marg(num_x);
        for (size_t x = 0; x < num_x; x++) {
            for (int omega = 0; omega < 2; omega++) {
                marg[x][omega] = contract_alice(rho, alice[x].effects[omega], d, d);
            }
        }
        for (size_t y = 0; y < k; y++) {
            for (int omega = 0; omega < 2; omega++) {
                std::array<CMatrix, 2> l{CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
                for (size_t x = 0; x < num_x; x++) {
                    l[set[y].eval(static_cast<uint32_t>(x))] += marg[x][omega];
                }
                bob[y][omega] = BinaryMeasurement::from_effect0(nonnegative_projector(l[0] - l[1]));
            }
        }
    }

    double max_completeness_error() const {
        double err = 0.0;
        for (const auto &m : alice) {
            err = std::max(err, completeness_error(m));
        }
        for (const auto &pair : bob) {
            for (const auto &m : pair) {
                err = std::max(err, completeness_error(m));
            }
        }
        return err;
    }

    EACCStrategy to_strategy() const {
        EACCStrategy s;
        s.n = set.width();
        s.local_dim = d;
        s.state = rho;
        s.alice = alice;
        s.labels.assign(set.labels().begin(), set.labels().end());
        s.bob = bob;
        return s;
    }
};

BinaryMeasurement random_projective(int d, std::mt19937_64 &rng) {
    int rank = std::max(1, d / 2);
    CMatrix u = random_unitary(d, rng);
    CMatrix cols = u.leftCols(rank);
    return BinaryMeasurement::from_effect0(cols * cols.adjoint());
}

BinaryMeasurement random_povm(int d, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CMatrix u = random_unitary(d, rng);
    Eigen::VectorXd diag(d);
    for (int i = 0; i < d; i++) {
        diag(i) = unit(rng);
    }
    CMatrix e0 = u * diag.cast<cd>().asDiagonal() * u.adjoint();
    e0 = 0.5 * (e0 + e0.adjoint());
    return BinaryMeasurement::from_effect0(e0);
}

struct EACCRestart {
    EACCStrategy strategy;
    double value = -1.0;
    int iterations = 0;
    bool converged = false;
    double max_decrease = 0.0;
    double max_completeness = 0.0;
};

}  // namespace

void check_hermitian(const CMatrix &m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "operator must be a nonempty square matrix");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw Error(ErrorCode::InvalidState, "operator is not Hermitian");
    }
}

void check_state(const CMatrix &rho, double tol) {
    check_hermitian(rho, tol);
    if (std::abs(rho.trace() - cd(1.0, 0.0)) > tol) {
        throw Error(ErrorCode::InvalidState, "state does not have unit trace");
    }
    if (min_eigenvalue(rho) < -tol) {
        throw Error(ErrorCode::InvalidState, "state is not positive semidefinite");
    }
}

BinaryMeasurement BinaryMeasurement::from_effect0(const CMatrix &effect0) {
    BinaryMeasurement m;
    m.effects[0] = effect0;
    m.effects[1] = CMatrix::Identity(effect0.rows(), effect0.cols()) - effect0;
    return m;
}

void BinaryMeasurement::validate(double tol) const {
    if (effects[0].rows() != effects[1].rows() || effects[0].cols() != effects[1].cols()) {
        throw Error(ErrorCode::DimensionMismatch, "effects differ in dimension");
    }
    for (const auto &e : effects) {
        if (e.rows() != e.cols() || e.rows() == 0) {
            throw Error(ErrorCode::DimensionMismatch, "effect must be a nonempty square matrix");
        }
        if ((e - e.adjoint()).cwiseAbs().maxCoeff() > tol) {
            throw Error(ErrorCode::InvalidEffect, "effect is not Hermitian");
        }
        if (min_eigenvalue(e) < -tol) {
            throw Error(ErrorCode::InvalidEffect, "effect is not positive semidefinite");
        }
    }
    if (completeness_error(*this) > tol) {
        throw Error(ErrorCode::InvalidEffect, "effects do not sum to identity");
    }
}

const BinaryMeasurement &EACCStrategy::bob_measurement(bool omega, const ParityLabel &y) const {
    for (size_t i = 0; i < labels.size(); i++) {
        if (labels[i] == y) {
            return bob[i][omega];
        }
    }
    throw Error(ErrorCode::MissingDecoding, "no measurement for label " + y.to_string());
}

void EACCStrategy::validate(const FunctionSet &set, double tol) const {
    if (n != set.width()) {
        throw Error(ErrorCode::WidthMismatch, "strategy width differs from set width");
    }
    if (local_dim < 1) {
        throw Error(ErrorCode::DimensionMismatch, "local dimension must be positive");
    }
    const Eigen::Index d = local_dim;
    if (state.rows() != d * d || state.cols() != d * d) {
        throw Error(ErrorCode::DimensionMismatch, "state is not on local_dim x local_dim");
    }
    if (alice.size() != set.num_inputs()) {
        throw Error(ErrorCode::DimensionMismatch, "need one sender measurement per input");
    }
    if (labels.size() != bob.size()) {
        throw Error(ErrorCode::DimensionMismatch, "labels and receiver measurements differ in length");
    }
    check_state(state, tol);
    auto check = [&](const BinaryMeasurement &m) {
        if (m.effects[0].rows() != d || m.effects[1].rows() != d) {
            throw Error(ErrorCode::DimensionMismatch, "measurement dimension differs from local_dim");
        }
        m.validate(tol);
    };
    for (const auto &m : alice) {
        check(m);
    }
    for (const auto &label : set.labels()) {
        check(bob_measurement(false, label));
        check(bob_measurement(true, label));
    }
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double evaluate_eacc(const EACCStrategy &strategy, const FunctionSet &set) {
    strategy.validate(set);
    double total = 0.0;
    for (uint32_t x = 0; x < set.num_inputs(); x++) {
        for (int omega = 0; omega < 2; omega++) {
            for (const auto &label : set.labels()) {
                const CMatrix &b = strategy.bob_measurement(omega, label).effects[label.eval(x)];
                total += trace_product(strategy.state, kron(strategy.alice[x].effects[omega], b));
            }
        }
    }
    return total / static_cast<double>(set.num_inputs() * set.size());
}

BellValueReport eacc_to_bell(const EACCStrategy &strategy, const FunctionSet &set) {
    BellValueReport report;
    report.eacc_value = evaluate_eacc(strategy, set);

    // Full correlation table p(u, v | x, y0, y), then the functional.
    const size_t nx = set.num_inputs(), k = set.size();
    std::vector<double> p(nx * 2 * k * 4);
    auto at = [&](size_t x, int y0, size_t y, int u, int v) -> double & {
        return p[(((x * 2 + y0) * k + y) * 2 + u) * 2 + v];
    };
    for (size_t x = 0; x < nx; x++) {
        for (int y0 = 0; y0 < 2; y0++) {
            for (size_t y = 0; y < k; y++) {
                const BinaryMeasurement &mb = strategy.bob_measurement(y0, set[y]);
                for (int u = 0; u < 2; u++) {
                    for (int v = 0; v < 2; v++) {
                        at(x, y0, y, u, v) =
                            trace_product(strategy.state, kron(strategy.alice[x].effects[u], mb.effects[v]));
                    }
                }
            }
        }
    }
    double total = 0.0;
    for (size_t x = 0; x < nx; x++) {
        for (int y0 = 0; y0 < 2; y0++) {
            for (size_t y = 0; y < k; y++) {
                total += at(x, y0, y, y0, set[y].eval(static_cast<uint32_t>(x)));
            }
        }
    }
    report.bell_value = total / static_cast<double>(nx * k);
    return report;
}

EACCStrategy embed_classical_eacc(const ClassicalStrategy &strategy, const FunctionSet &set, int local_dim) {
    if (strategy.encoding.width() != set.width()) {
        throw Error(ErrorCode::WidthMismatch, "encoding width differs from set width");
    }
    if (local_dim < 1) {
        throw Error(ErrorCode::DimensionMismatch, "local dimension must be positive");
    }
    const int d = local_dim;
    const CMatrix id = CMatrix::Identity(d, d), zero = CMatrix::Zero(d, d);
    EACCStrategy s;
    s.n = set.width();
    s.local_dim = d;
    s.state = CMatrix::Zero(d * d, d * d);
    s.state(0, 0) = 1.0;
    for (uint32_t x = 0; x < set.num_inputs(); x++) {
        s.alice.push_back(BinaryMeasurement::from_effect0(strategy.encoding(x) ? zero : id));
    }
    for (const auto &label : set.labels()) {
        s.labels.push_back(label);
        std::array<BinaryMeasurement, 2> pair;
        for (int omega = 0; omega < 2; omega++) {
            pair[omega] = BinaryMeasurement::from_effect0(strategy.decode(label, omega) ? zero : id);
        }
        s.bob.push_back(pair);
    }
    return s;
}

CMatrix random_unitary(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            g(i, j) = cd(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR();
    // Fix the phases so the distribution is Haar.
    for (int i = 0; i < dim; i++) {
        cd diag = r(i, i);
        double mag = std::abs(diag);
        if (mag > 0.0) {
            q.col(i) *= diag / mag;
        }
    }
    return q;
}

EACCStrategy random_eacc_strategy(const FunctionSet &set, int local_dim, std::mt19937_64 &rng) {
    const int d = local_dim, dd = d * d;
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(dd, dd);
    for (int i = 0; i < dd; i++) {
        for (int j = 0; j < dd; j++) {
            g(i, j) = cd(gauss(rng), gauss(rng));
        }
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    rho = 0.5 * (rho + rho.adjoint());

    EACCStrategy s;
    s.n = set.width();
    s.local_dim = d;
    s.state = rho;
    for (uint32_t x = 0; x < set.num_inputs(); x++) {
        s.alice.push_back(random_povm(d, rng));
    }
    for (const auto &label : set.labels()) {
        s.labels.push_back(label);
        s.bob.push_back({random_povm(d, rng), random_povm(d, rng)});
    }
    return s;
}

EACCSeesawReport eacc_seesaw(const FunctionSet &set, const EACCSeesawOptions &options) {
    if (options.local_dim < 2 || options.local_dim > kMaxLocalDim) {
        throw Error(ErrorCode::DimensionMismatch,
                    "local_dim must be in [2, " + std::to_string(kMaxLocalDim) + "]");
    }
    if (options.restarts < 1 || options.max_iters < 1 || !(options.tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "need restarts >= 1, max_iters >= 1 and tol > 0");
    }
    std::vector<EACCRestart> results(static_cast<size_t>(options.restarts));
    internal::parallel_for(results.size(), options.threads, [&](size_t restart) {
        auto rng = internal::substream(options.seed, restart);
        EACCWorkspace ws(set, options.local_dim);
        for (size_t x = 0; x < ws.num_x; x++) {
            ws.alice.push_back(random_projective(ws.d, rng));
        }
        for (size_t y = 0; y < ws.k; y++) {
            ws.bob.push_back({random_projective(ws.d, rng), random_projective(ws.d, rng)});
        }
        EACCRestart &out = results[restart];
        ws.state_step();
        double value = ws.objective();
        auto track = [&](double next) {
            out.max_decrease = std::max(out.max_decrease, value - next);
            value = next;
            out.max_completeness = std::max(out.max_completeness, ws.max_completeness_error());
        };
        for (int it = 1; it <= options.max_iters; it++) {
            double before = value;
            ws.alice_step();
            track(ws.objective());
            ws.bob_step();
            track(ws.objective());
            ws.state_step();
            track(ws.objective());
            out.iterations = it;
            if (value - before < options.tol) {
                out.converged = true;
                break;
            }
        }
        out.strategy = ws.to_strategy();
        out.value = value;
    });

    EACCSeesawReport report;
    report.seed = options.seed;
    size_t best = 0;
    for (size_t i = 0; i < results.size(); i++) {
        report.max_decrease = std::max(report.max_decrease, results[i].max_decrease);
        report.max_completeness_error = std::max(report.max_completeness_error, results[i].max_completeness);
        if (results[i].value > results[best].value) {
            best = i;
        }
    }
    report.best_restart = static_cast<int>(best);
    report.iterations = results[best].iterations;
    report.converged = results[best].converged;
    report.best_strategy = std::move(results[best].strategy);
    report.value = evaluate_eacc(report.best_strategy, set);
    return report;
}

}  // namespace grac
