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

#ifndef GRAC_CHANNEL_H
#define GRAC_CHANNEL_H

#include <string_view>

#include "grac/bloch.h"

namespace grac {

enum class ChannelKind { Depolarizing, Dephasing };

std::string_view channel_kind_name(ChannelKind kind);
ChannelKind parse_channel_kind(std::string_view s);

/// Unital qubit channel acting on Bloch vectors.
///
///   Depolarizing(lambda):       r -> (1 - lambda) r,                lambda in [0, 1]
///   Dephasing(lambda, axis n):  r -> (r.n) n + (1 - 2 lambda) r_perp, lambda in [0, 1/2]
class BlochMap {
   public:
    static BlochMap depolarizing(double lambda);
    static BlochMap dephasing(double lambda, const BlochVector &axis);
    static BlochMap make(ChannelKind kind, double lambda, const BlochVector &axis);
    static BlochMap identity();

    ChannelKind kind() const noexcept {
        return kind_;
    }
    double lambda() const noexcept {
        return lambda_;
    }
    const BlochVector &axis() const noexcept {
        return axis_;
    }
    /// Symmetric 3x3 matrix of the induced linear map.
    const Mat3 &matrix() const noexcept {
        return matrix_;
    }
    BlochVector apply(const BlochVector &r) const {
        return apply_matrix(matrix_, r);
    }

    /// Largest noise parameter the kind accepts.
    static double max_lambda(ChannelKind kind);

   private:
    BlochMap(ChannelKind kind, double lambda, const BlochVector &axis);

    ChannelKind kind_;
    double lambda_;
    BlochVector axis_;
    Mat3 matrix_;
};

inline BlochVector apply_channel(const BlochMap &map, const BlochVector &r) {
    return map.apply(r);
}

}  // namespace grac

#endif  // GRAC_CHANNEL_H
