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

#ifndef GRAC_BLOCH_H
#define GRAC_BLOCH_H

#include <array>
#include <cmath>
#include <string>

namespace grac {

/// Real 3-vector; a unit vector parameterizes a pure qubit state
/// (I + r.sigma)/2 or a projective measurement along v.
struct BlochVector {
    std::array<double, 3> c{0.0, 0.0, 0.0};

    double operator[](size_t i) const {
        return c[i];
    }
    double &operator[](size_t i) {
        return c[i];
    }

    BlochVector &operator+=(const BlochVector &o) {
        for (size_t i = 0; i < 3; i++) {
            c[i] += o.c[i];
        }
        return *this;
    }
    friend BlochVector operator+(BlochVector a, const BlochVector &b) {
        return a += b;
    }
    friend BlochVector operator-(BlochVector a, const BlochVector &b) {
        for (size_t i = 0; i < 3; i++) {
            a.c[i] -= b.c[i];
        }
        return a;
    }
    friend BlochVector operator*(double s, BlochVector a) {
        for (auto &v : a.c) {
            v *= s;
        }
        return a;
    }
    friend BlochVector operator-(BlochVector a) {
        return -1.0 * a;
    }
    bool operator==(const BlochVector &) const = default;

    double dot(const BlochVector &o) const {
        return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2];
    }
    double norm() const {
        return std::sqrt(dot(*this));
    }
    bool is_unit(double tol = 1e-12) const {
        return std::abs(norm() - 1.0) <= tol;
    }
};

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 identity3() {
    return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

inline BlochVector apply_matrix(const Mat3 &m, const BlochVector &v) {
    BlochVector out;
    for (size_t i = 0; i < 3; i++) {
        out.c[i] = m[i][0] * v.c[0] + m[i][1] * v.c[1] + m[i][2] * v.c[2];
    }
    return out;
}

inline BlochVector apply_transpose(const Mat3 &m, const BlochVector &v) {
    BlochVector out;
    for (size_t i = 0; i < 3; i++) {
        out.c[i] = m[0][i] * v.c[0] + m[1][i] * v.c[1] + m[2][i] * v.c[2];
    }
    return out;
}

}  // namespace grac

#endif  // GRAC_BLOCH_H
