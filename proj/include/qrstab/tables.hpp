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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrstab/analysis.hpp"
#include "qrstab/type2.hpp"

namespace qrstab {

// Reference values reproduced by `qrstab tables <1..4>`.

struct TypeIPlusRow {
    std::uint32_t n;
    std::uint32_t p;
    std::size_t k_logical;
    std::size_t d_min;
    std::size_t d_dagger;
    /// d_min is tabulated as exact (otherwise only an upper bound is checked).
    bool exact;
};

struct TypeIMinusRow {
    std::uint32_t n;
    std::uint32_t p;
    std::size_t k_logical;
    std::size_t d_min;
    std::size_t d_dagger;
};

struct QcsRow {
    std::uint32_t n;
    QcsVariant variant;
    std::uint32_t p;
    std::size_t N;
    std::size_t k_logical;
    /// Tabulated distance range; lo == 0 means "at most hi".
    std::size_t d_lo;
    std::size_t d_hi;
    QcsLayout layout;
    std::optional<std::vector<std::size_t>> removed;
};

struct QcsA21Row {
    std::size_t k_logical;
    std::size_t d_min;
    QcsLayout layout;
    std::vector<std::size_t> removed;
};

const std::vector<TypeIPlusRow> &table1_rows();
const std::vector<TypeIMinusRow> &table2_rows();
const std::vector<QcsRow> &table3_rows();
const std::vector<QcsA21Row> &table4_rows();

struct TableCheck {
    std::string row;
    std::string quantity;
    std::string expected;
    std::string actual;
    bool pass = true;
    /// Reported but not counted toward the verdict.
    bool informational = false;
};

struct TableReport {
    int table = 0;
    std::vector<TableCheck> checks;

    bool pass() const;
    std::string text() const;
};

/// Throws InvalidArgument unless which is 1..4.
TableReport run_table(int which, const DistanceOptions &opts);

}  // namespace qrstab
