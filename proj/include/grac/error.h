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

#ifndef GRAC_ERROR_H
#define GRAC_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace grac {

enum class ErrorCode {
    WidthMismatch,
    WidthOutOfRange,
    NotBalanced,
    WrongCardinality,
    CardinalityMismatch,
    InvalidLabel,
    InvalidArgument,
    MissingDecoding,
    NotUnitVector,
    InvalidChannel,
    UnknownCase,
    NoCrossing,
    DimensionMismatch,
    InvalidEffect,
    InvalidState,
    ParseError,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures surface as this exception; `code()` is the
/// machine-readable part that the CLI reports.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace grac

#endif  // GRAC_ERROR_H
