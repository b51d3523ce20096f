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

#include "grac/channel.h"

#include <string>

#include "grac/error.h"

namespace grac {

std::string_view channel_kind_name(ChannelKind kind) {
    return kind == ChannelKind::Depolarizing ? "depolarizing" : "dephasing";
}

ChannelKind parse_channel_kind(std::string_view s) {
    if (s == "depolarizing" || s == "depol") {
        return ChannelKind::Depolarizing;
    }
    if (s == "dephasing" || s == "dephase") {
        return ChannelKind::Dephasing;
    }
    throw Error(ErrorCode::InvalidChannel, "unknown channel kind '" + std::string(s) + "'");
}

double BlochMap::max_lambda(ChannelKind kind) {
    return kind == ChannelKind::Depolarizing ? 1.0 : 0.5;
}

BlochMap::BlochMap(ChannelKind kind, double lambda, const BlochVector &axis)
    : kind_(kind), lambda_(lambda), axis_(axis), matrix_(identity3()) {
    if (!(lambda >= 0.0 && lambda <= max_lambda(kind))) {
        throw Error(ErrorCode::InvalidChannel, std::string(channel_kind_name(kind)) + " lambda " +
                                                   std::to_string(lambda) + " out of range");
    }
    if (kind == ChannelKind::Depolarizing) {
        for (size_t i = 0; i < 3; i++) {
            matrix_[i][i] = 1.0 - lambda;
        }
        return;
    }
    if (!axis.is_unit(1e-9)) {
        throw Error(ErrorCode::NotUnitVector, "dephasing axis must be a unit vector");
    }
    // n n^T + (1 - 2 lambda)(I - n n^T)
    double shrink = 1.0 - 2.0 * lambda;
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            double nn = axis[i] * axis[j];
            matrix_[i][j] = nn + shrink * ((i == j ? 1.0 : 0.0) - nn);
        }
    }
}

BlochMap BlochMap::depolarizing(double lambda) {
    return BlochMap(ChannelKind::Depolarizing, lambda, BlochVector{});
}

BlochMap BlochMap::dephasing(double lambda, const BlochVector &axis) {
    return BlochMap(ChannelKind::Dephasing, lambda, axis);
}

BlochMap BlochMap::make(ChannelKind kind, double lambda, const BlochVector &axis) {
    return BlochMap(kind, lambda, axis);
}

BlochMap BlochMap::identity() {
    return depolarizing(0.0);
}

}  // namespace grac
