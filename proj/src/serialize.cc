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

#include "grac/serialize.h"

#include <algorithm>
#include <string>

#include "grac/error.h"

namespace grac {

namespace {

std::string decision_key(const ParityLabel &label, int omega) {
    return label.to_string() + ":" + std::to_string(omega);
}

Json vec_json(const BlochVector &v) {
    return Json::array({v[0], v[1], v[2]});
}

BlochVector vec_from(const Json &j) {
    if (!j.is_array() || j.size() != 3) {
        throw Error(ErrorCode::ParseError, "Bloch vector must be a 3-element array");
    }
    return BlochVector{{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()}};
}

Json measurement_json(const BinaryMeasurement &m) {
    return Json{{"effect0", to_json(m.effects[0])}, {"effect1", to_json(m.effects[1])}};
}

BinaryMeasurement measurement_from(const Json &j) {
    BinaryMeasurement m;
    m.effects[0] = matrix_from_json(j.at("effect0"));
    m.effects[1] = matrix_from_json(j.at("effect1"));
    return m;
}

// nlohmann's own exceptions become ParseError; library errors pass through.
template <typename Fn>
auto parsing(const char *what, Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error &) {
        throw;
    } catch (const std::exception &e) {
        throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json to_json(const Rational &r) {
    return Json{{"wins", r.wins}, {"total", r.total}, {"reduced", r.reduced()}, {"value", r.value()}};
}

Json to_json(const ClassicalStrategy &s) {
    Json decoding = Json::object();
    for (const auto &rule : s.decoding) {
        for (int omega = 0; omega < 2; omega++) {
            decoding[decision_key(rule.label, omega)] = rule.guess[omega];
        }
    }
    return Json{{"n", s.encoding.width()}, {"encoding", s.encoding.to_bitstring()}, {"decoding", decoding}};
}

ClassicalStrategy classical_from_json(const Json &j) {
    return parsing("classical strategy", [&] {
        ClassicalStrategy s{BooleanFn::from_bitstring(j.at("encoding").get<std::string>()), {}};
        const int n = j.at("n").get<int>();
        if (n != s.encoding.width()) {
            throw Error(ErrorCode::WidthMismatch, "encoding length does not match n");
        }
        for (const auto &[key, value] : j.at("decoding").items()) {
            auto colon = key.find(':');
            if (colon == std::string::npos) {
                throw Error(ErrorCode::ParseError, "decision key '" + key + "' lacks ':'");
            }
            ParityLabel label = ParityLabel::parse(key.substr(0, colon));
            std::string omega = key.substr(colon + 1);
            if (label.width() != n || (omega != "0" && omega != "1")) {
                throw Error(ErrorCode::ParseError, "bad decision key '" + key + "'");
            }
            auto it = std::find_if(s.decoding.begin(), s.decoding.end(),
                                   [&](const DecodeRule &r) { return r.label == label; });
            if (it == s.decoding.end()) {
                s.decoding.push_back(DecodeRule{label, {0, 0}});
                it = s.decoding.end() - 1;
            }
            int z = value.get<int>();
            if (z != 0 && z != 1) {
                throw Error(ErrorCode::ParseError, "guess must be 0 or 1");
            }
            it->guess[omega == "1"] = static_cast<uint8_t>(z);
        }
        std::sort(s.decoding.begin(), s.decoding.end(),
                  [](const DecodeRule &a, const DecodeRule &b) { return a.label < b.label; });
        return s;
    });
}

Json to_json(const PMStrategy &s) {
    Json preps = Json::object(), meas = Json::object();
    for (uint32_t x = 0; x < s.preparations.size(); x++) {
        preps[input_bitstring(s.n, x)] = vec_json(s.preparations[x]);
    }
    for (size_t i = 0; i < s.labels.size(); i++) {
        meas[s.labels[i].to_string()] = vec_json(s.measurements[i]);
    }
    return Json{{"n", s.n}, {"preparations", preps}, {"measurements", meas}};
}

PMStrategy pm_from_json(const Json &j) {
    return parsing("prepare-and-measure strategy", [&] {
        PMStrategy s;
        s.n = j.at("n").get<int>();
        if (s.n < 1 || s.n > kMaxWidth) {
            throw Error(ErrorCode::WidthOutOfRange, "n out of range");
        }
        s.preparations.assign(size_t{1} << s.n, BlochVector{});
        std::vector<bool> seen(s.preparations.size(), false);
        for (const auto &[key, value] : j.at("preparations").items()) {
            uint32_t x = parse_input_bitstring(s.n, key);
            s.preparations[x] = vec_from(value);
            seen[x] = true;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw Error(ErrorCode::ParseError, "preparations must cover every input");
        }
        for (const auto &[key, value] : j.at("measurements").items()) {
            s.labels.push_back(ParityLabel::parse(key));
            s.measurements.push_back(vec_from(value));
        }
        return s;
    });
}

Json to_json(const CMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(Json::array({m(i, c).real(), m(i, c).imag()}));
        }
        rows.push_back(row);
    }
    return rows;
}

CMatrix matrix_from_json(const Json &j) {
    return parsing("complex matrix", [&] {
        if (!j.is_array() || j.empty()) {
            throw Error(ErrorCode::ParseError, "matrix must be a nonempty array of rows");
        }
        const size_t rows = j.size(), cols = j[0].size();
        CMatrix m(rows, cols);
        for (size_t i = 0; i < rows; i++) {
            if (j[i].size() != cols) {
                throw Error(ErrorCode::ParseError, "ragged matrix");
            }
            for (size_t c = 0; c < cols; c++) {
                const Json &z = j[i][c];
                if (!z.is_array() || z.size() != 2) {
                    throw Error(ErrorCode::ParseError, "complex entry must be [re, im]");
                }
                m(i, c) = {z[0].get<double>(), z[1].get<double>()};
            }
        }
        return m;
    });
}

Json to_json(const EACCStrategy &s) {
    Json alice = Json::object(), bob = Json::object();
    for (uint32_t x = 0; x < s.alice.size(); x++) {
        alice[input_bitstring(s.n, x)] = measurement_json(s.alice[x]);
    }
    for (size_t i = 0; i < s.labels.size(); i++) {
        for (int omega = 0; omega < 2; omega++) {
            bob[decision_key(s.labels[i], omega)] = measurement_json(s.bob[i][omega]);
        }
    }
    return Json{{"n", s.n}, {"local_dim", s.local_dim}, {"state", to_json(s.state)}, {"alice", alice}, {"bob", bob}};
}

EACCStrategy eacc_from_json(const Json &j) {
    return parsing("entanglement-assisted strategy", [&] {
        EACCStrategy s;
        s.n = j.at("n").get<int>();
        if (s.n < 1 || s.n > kMaxWidth) {
            throw Error(ErrorCode::WidthOutOfRange, "n out of range");
        }
        s.local_dim = j.at("local_dim").get<int>();
        s.state = matrix_from_json(j.at("state"));
        s.alice.assign(size_t{1} << s.n, BinaryMeasurement{});
        std::vector<bool> seen(s.alice.size(), false);
        for (const auto &[key, value] : j.at("alice").items()) {
            uint32_t x = parse_input_bitstring(s.n, key);
            s.alice[x] = measurement_from(value);
            seen[x] = true;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw Error(ErrorCode::ParseError, "sender measurements must cover every input");
        }
        for (const auto &[key, value] : j.at("bob").items()) {
            auto colon = key.find(':');
            if (colon == std::string::npos) {
                throw Error(ErrorCode::ParseError, "receiver key '" + key + "' lacks ':'");
            }
            ParityLabel label = ParityLabel::parse(key.substr(0, colon));
            std::string omega = key.substr(colon + 1);
            if (omega != "0" && omega != "1") {
                throw Error(ErrorCode::ParseError, "bad receiver key '" + key + "'");
            }
            auto it = std::find(s.labels.begin(), s.labels.end(), label);
            size_t idx = static_cast<size_t>(it - s.labels.begin());
            if (it == s.labels.end()) {
                s.labels.push_back(label);
                s.bob.emplace_back();
            }
            s.bob[idx][omega == "1"] = measurement_from(value);
        }
        return s;
    });
}

Json to_json(const CrossingWindow &w) {
    return Json{{"low", w.low}, {"high", w.high}, {"tol", w.tol}};
}

CrossingWindow window_from_json(const Json &j) {
    return parsing("crossing window", [&] {
        return CrossingWindow{j.at("low").get<double>(), j.at("high").get<double>(), j.at("tol").get<double>()};
    });
}

}  // namespace grac
