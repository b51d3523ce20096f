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

#ifndef GRAC_SERIALIZE_H
#define GRAC_SERIALIZE_H

#include "json.hpp"

#include "grac/classical.h"
#include "grac/eacc.h"
#include "grac/noise.h"
#include "grac/quantum_pm.h"

namespace grac {

using Json = nlohmann::ordered_json;

// Inputs and labels are keyed by bitstrings, x_1 first. Decisions are keyed
// "label:omega". Complex entries are [re, im]; matrices are row-major with
// the sender's factor first.

Json to_json(const Rational &r);
Json to_json(const ClassicalStrategy &s);
Json to_json(const PMStrategy &s);
Json to_json(const CMatrix &m);
Json to_json(const EACCStrategy &s);
Json to_json(const CrossingWindow &w);

/// All parsers throw ParseError on malformed input.
ClassicalStrategy classical_from_json(const Json &j);
PMStrategy pm_from_json(const Json &j);
CMatrix matrix_from_json(const Json &j);
EACCStrategy eacc_from_json(const Json &j);
CrossingWindow window_from_json(const Json &j);

}  // namespace grac

#endif  // GRAC_SERIALIZE_H
