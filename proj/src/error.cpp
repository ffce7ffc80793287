// Copyright 2026 The qrstab Authors
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

#include "qrstab/error.hpp"

namespace qrstab {

const char *error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Ok:
        return "Ok";
    case ErrorCode::NotPrime:
        return "NotPrime";
    case ErrorCode::UnsupportedModulus:
        return "UnsupportedModulus";
    case ErrorCode::WrongForm:
        return "WrongForm";
    case ErrorCode::UnsupportedForm:
        return "UnsupportedForm";
    case ErrorCode::SipViolation:
        return "SipViolation";
    case ErrorCode::RowIndexOutOfRange:
        return "RowIndexOutOfRange";
    case ErrorCode::LengthMismatch:
        return "LengthMismatch";
    case ErrorCode::ShapeMismatch:
        return "ShapeMismatch";
    case ErrorCode::InvalidSymbol:
        return "InvalidSymbol";
    case ErrorCode::InexactInputs:
        return "InexactInputs";
    case ErrorCode::BudgetExhausted:
        return "BudgetExhausted";
    case ErrorCode::MalformedAlist:
        return "MalformedAlist";
    case ErrorCode::MalformedRecord:
        return "MalformedRecord";
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::Io:
        return "Io";
    case ErrorCode::Internal:
        return "Internal";
    }
    return "Unknown";
}

}  // namespace qrstab
