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

#include "grac/error.h"

namespace grac {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::WidthMismatch:
            return "WidthMismatch";
        case ErrorCode::WidthOutOfRange:
            return "WidthOutOfRange";
        case ErrorCode::NotBalanced:
            return "NotBalanced";
        case ErrorCode::WrongCardinality:
            return "WrongCardinality";
        case ErrorCode::CardinalityMismatch:
            return "CardinalityMismatch";
        case ErrorCode::InvalidLabel:
            return "InvalidLabel";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::MissingDecoding:
            return "MissingDecoding";
        case ErrorCode::NotUnitVector:
            return "NotUnitVector";
        case ErrorCode::InvalidChannel:
            return "InvalidChannel";
        case ErrorCode::UnknownCase:
            return "UnknownCase";
        case ErrorCode::NoCrossing:
            return "NoCrossing";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::InvalidEffect:
            return "InvalidEffect";
        case ErrorCode::InvalidState:
            return "InvalidState";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::IoError:
            return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace grac
