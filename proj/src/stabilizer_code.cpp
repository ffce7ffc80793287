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

#include "qrstab/stabilizer_code.hpp"

#include <algorithm>
#include <string>

#include "qrstab/error.hpp"
#include "qrstab/symplectic.hpp"

namespace qrstab {

const char *family_name(CodeFamily f) noexcept {
    switch (f) {
    case CodeFamily::TypeI:
        return "type1";
    case CodeFamily::QcsA:
        return "qcs-a";
    case CodeFamily::QcsB:
        return "qcs-b";
    case CodeFamily::Imported:
        return "imported";
    }
    return "unknown";
}

StabilizerCode reduce_rows(const Gf2Matrix &full, const std::vector<std::size_t> &removed) {
    if (full.cols() % 2 != 0) {
        throw Error(ErrorCode::ShapeMismatch, "parity-check matrix must have 2N columns");
    }
    if (!sip_check(full)) {
        throw Error(ErrorCode::SipViolation, "generators do not commute");
    }
    std::vector<char> drop(full.rows(), 0);
    for (std::size_t r : removed) {
        if (r == 0 || r > full.rows()) {
            throw Error(ErrorCode::RowIndexOutOfRange,
                        "row " + std::to_string(r) + " outside 1.." + std::to_string(full.rows()));
        }
        drop[r - 1] = 1;
    }
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < full.rows(); ++r) {
        if (!drop[r]) {
            kept.push_back(r);
        }
    }
    Gf2Matrix retained = select_rows(full, kept);
    auto independent = independent_row_subset(retained);

    StabilizerCode code;
    code.n_qubits = full.cols() / 2;
    code.h = select_rows(retained, independent);
    code.k_logical = code.n_qubits - code.h.rows();
    code.full_rank = rank(full);
    for (std::size_t r = 0; r < full.rows(); ++r) {
        if (drop[r]) {
            code.removed_rows.push_back(r + 1);
        }
    }
    code.trivial = code.k_logical == 0;
    if (independent.size() != retained.rows()) {
        code.notes.push_back(std::to_string(retained.rows() - independent.size()) +
                             " dependent retained rows dropped");
    }
    return code;
}

StabilizerCode make_code(const Gf2Matrix &h) { return reduce_rows(h, {}); }

}  // namespace qrstab
