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

// Explicit optimal qubit protocols for three-bit GRACs, transcribed as Bloch
// vectors. Inputs are indexed 000..111 with x_1 most significant.

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

#include "grac/error.h"
#include "grac/quantum_pm.h"

namespace grac {

namespace {

constexpr uint32_t kX1 = 0b100, kX2 = 0b010, kX3 = 0b001;

BlochVector vec(double a, double b, double c) {
    return BlochVector{{a, b, c}};
}

PMStrategy make(const FunctionSet &set, std::vector<BlochVector> preps,
                std::initializer_list<std::pair<uint32_t, BlochVector>> meas) {
    PMStrategy s;
    s.n = 3;
    s.preparations = std::move(preps);
    for (const auto &[bits, v] : meas) {
        s.labels.emplace_back(3, bits);
        s.measurements.push_back(v);
    }
    s.validate(set);
    return s;
}

std::vector<BlochVector> by_input(std::initializer_list<std::pair<uint32_t, BlochVector>> rows) {
    std::vector<BlochVector> out(8);
    for (const auto &[x, r] : rows) {
        out[x] = r;
    }
    return out;
}

}  // namespace

std::string_view fixture_case_name(FixtureCase c) {
    switch (c) {
        case FixtureCase::A:
            return "A";
        case FixtureCase::B1:
            return "B1";
        case FixtureCase::B2:
            return "B2";
        case FixtureCase::C:
            return "C";
        case FixtureCase::DBox:
            return "D_box";
        case FixtureCase::DPlanar:
            return "D_planar";
        case FixtureCase::E:
            return "E";
    }
    return "?";
}

FixtureCase parse_fixture_case(std::string_view s) {
    for (FixtureCase c : all_fixture_cases()) {
        if (fixture_case_name(c) == s) {
            return c;
        }
    }
    throw Error(ErrorCode::UnknownCase, "unknown fixture case '" + std::string(s) + "'");
}

std::vector<FixtureCase> all_fixture_cases() {
    return {FixtureCase::A,  FixtureCase::B1,      FixtureCase::B2, FixtureCase::C,
            FixtureCase::DBox, FixtureCase::DPlanar, FixtureCase::E};
}

Fixture explicit_fixture(FixtureCase c) {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s6 = std::sqrt(6.0);
    const BlochVector ex = vec(1, 0, 0), ey = vec(0, 1, 0), ez = vec(0, 0, 1);

    switch (c) {
        case FixtureCase::A: {
            // Standard (2 -> 1) QRAC on x_1, x_2; x_3 is ignored.
            FunctionSet set = FunctionSet::from_bits(3, {kX1, kX2});
            std::vector<BlochVector> preps(8);
            for (uint32_t x = 0; x < 8; x++) {
                double a = ((x >> 2) & 1) ? -1.0 : 1.0;
                double b = ((x >> 1) & 1) ? -1.0 : 1.0;
                preps[x] = vec(a / s2, b / s2, 0);
            }
            return {c, set, make(set, preps, {{kX1, ex}, {kX2, ey}}), 0.5 * (1 + 1 / s2)};
        }
        case FixtureCase::B1: {
            // (3 -> 1) QRAC: cube vertices.
            FunctionSet set = FunctionSet::from_bits(3, {kX1, kX2, kX3});
            std::vector<BlochVector> preps(8);
            for (uint32_t x = 0; x < 8; x++) {
                preps[x] = vec(((x >> 2) & 1) ? -1 / s3 : 1 / s3, ((x >> 1) & 1) ? -1 / s3 : 1 / s3,
                               (x & 1) ? -1 / s3 : 1 / s3);
            }
            return {c, set, make(set, preps, {{kX1, ex}, {kX2, ey}, {kX3, ez}}), 0.5 * (1 + 1 / s3)};
        }
        case FixtureCase::B2: {
            // {x_1, x_2, x_1 ^ x_2}: tetrahedron, x_3 ignored.
            FunctionSet set = FunctionSet::from_bits(3, {kX1, kX2, kX1 | kX2});
            const double t = 1 / s3;
            BlochVector p00 = vec(t, t, t), p01 = vec(t, -t, -t), p10 = vec(-t, t, -t), p11 = vec(-t, -t, t);
            auto preps = by_input({{0b000, p00},
                                   {0b001, p00},
                                   {0b010, p01},
                                   {0b011, p01},
                                   {0b100, p10},
                                   {0b101, p10},
                                   {0b110, p11},
                                   {0b111, p11}});
            return {c, set, make(set, preps, {{kX1, ex}, {kX2, ey}, {kX1 | kX2, ez}}), 0.5 * (1 + 1 / s3)};
        }
        case FixtureCase::C: {
            // Open quadruple {x_1, x_2, x_3, x_1 ^ x_2}.
            FunctionSet set = FunctionSet::from_bits(3, {kX1, kX2, kX3, kX1 | kX2});
            const double a = std::sqrt(2.0 / 3.0), b = 1 / s6, h = 1 / s2;
            auto preps = by_input({{0b000, vec(a, b, b)},
                                   {0b001, vec(a, -b, b)},
                                   {0b010, vec(0, h, -h)},
                                   {0b100, vec(0, h, -h)},
                                   {0b011, vec(0, -h, -h)},
                                   {0b101, vec(0, -h, -h)},
                                   {0b110, vec(-a, b, b)},
                                   {0b111, vec(-a, -b, b)}});
            return {c, set, make(set, preps, {{kX1, ex}, {kX2, ex}, {kX3, ey}, {kX1 | kX2, ez}}),
                    0.5 * (1 + (s2 + s6) / 8)};
        }
        case FixtureCase::DBox: {
            // {x_1, x_2, x_3, x_1 ^ x_2, x_1 ^ x_3}, states on a rectangular box.
            FunctionSet set = FunctionSet::from_bits(3, {kX1, kX2, kX3, kX1 | kX2, kX1 | kX3});
            const double p = 1 / s5, q = 2 / s5;
            auto preps = by_input({{0b000, vec(p, 0, q)},
                                   {0b001, vec(p, q, 0)},
                                   {0b010, vec(p, -q, 0)},
                                   {0b011, vec(p, 0, -q)},
                                   {0b100, vec(-p, q, 0)},
                                   {0b101, vec(-p, 0, -q)},
                                   {0b110, vec(-p, 0, q)},
                                   {0b111, vec(-p, -q, 0)}});
            return {c, set,
                    make(set, preps, {{kX1, ex}, {kX2, ey}, {kX3, ez}, {kX1 | kX2, ez}, {kX1 | kX3, -ey}}),
                    0.5 * (1 + 1 / s5)};
        }
        case FixtureCase::DPlanar: {
            // Same quintuple, states on a great circle.
            FunctionSet set = FunctionSet::from_bits(3, {kX1, kX2, kX3, kX1 | kX2, kX1 | kX3});
            const double p = 1 / s5, q = 2 / s5;
            auto preps = by_input({{0b000, vec(p, q, 0)},
                                   {0b001, vec(p, q, 0)},
                                   {0b010, vec(p, -q, 0)},
                                   {0b011, vec(p, -q, 0)},
                                   {0b101, vec(-p, q, 0)},
                                   {0b111, vec(-p, q, 0)},
                                   {0b100, vec(-p, -q, 0)},
                                   {0b110, vec(-p, -q, 0)}});
            return {c, set,
                    make(set, preps, {{kX1, ex}, {kX2, ey}, {kX3, -ey}, {kX1 | kX2, ey}, {kX1 | kX3, ey}}),
                    0.5 * (1 + 1 / s5)};
        }
        case FixtureCase::E: {
            // All pairs and singles: {x_1, x_2, x_3, x_1 ^ x_2, x_1 ^ x_3, x_2 ^ x_3}.
            FunctionSet set = FunctionSet::from_bits(3, {kX1, kX2, kX3, kX1 | kX2, kX1 | kX3, kX2 | kX3});
            const double a = std::sqrt(2.0 / 3.0), b = 1 / s6;
            auto preps = by_input({{0b000, vec(a, b, b)},
                                   {0b001, vec(-a, b, -b)},
                                   {0b010, vec(a, -b, b)},
                                   {0b011, vec(a, -b, -b)},
                                   {0b100, vec(-a, -b, b)},
                                   {0b101, vec(-a, -b, -b)},
                                   {0b110, vec(-a, b, b)},
                                   {0b111, vec(a, b, -b)}});
            return {c, set,
                    make(set, preps,
                         {{kX1, ex}, {kX3, ez}, {kX1 | kX2, ey}, {kX2, -ex}, {kX1 | kX3, ex}, {kX2 | kX3, ex}}),
                    0.5 * (1 + 1 / s6)};
        }
    }
    throw Error(ErrorCode::UnknownCase, "unknown fixture case");
}

}  // namespace grac
