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

#pragma once

#include <stdexcept>
#include <string>

namespace qrstab {

/// Failure categories shared by the C++ API and the C error codes in qrstab.h.
/// Values are part of the C ABI; append only.
enum class ErrorCode : int {
    Ok = 0,
    NotPrime = 1,
    UnsupportedModulus = 2,
    WrongForm = 3,
    UnsupportedForm = 4,
    SipViolation = 5,
    RowIndexOutOfRange = 6,
    LengthMismatch = 7,
    ShapeMismatch = 8,
    InvalidSymbol = 9,
    InexactInputs = 10,
    BudgetExhausted = 11,
    MalformedAlist = 12,
    MalformedRecord = 13,
    InvalidArgument = 14,
    Io = 15,
    Internal = 16,
};

const char *error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace qrstab
