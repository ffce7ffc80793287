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
#include "qrstab/gf2.hpp"
#include "qrstab/stabilizer_code.hpp"

namespace qrstab {

inline constexpr int kSchemaVersion = 1;

/// alist text for a binary matrix (rows first, indices 1-based, zero padded).
std::string export_alist(const Gf2Matrix &m);
/// Exact inverse of export_alist. Throws MalformedAlist with the offending line.
Gf2Matrix import_alist(const std::string &text);

/// One generator per line over I, X, Y, Z.
std::string export_pauli(const Gf2Matrix &h);
/// Throws InvalidSymbol, LengthMismatch.
Gf2Matrix import_pauli(const std::string &text);

struct TaggedDistance {
    std::size_t value = 0;
    std::string tag;
    friend bool operator==(const TaggedDistance &, const TaggedDistance &) = default;
};

struct CodeRecord {
    int schema_version = kSchemaVersion;
    std::string name;
    std::string family;
    std::string variant;
    std::string layout;
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::size_t> removed_rows;
    std::size_t N = 0;
    std::size_t K = 0;
    std::size_t rank = 0;
    std::size_t full_rank = 0;
    std::optional<TaggedDistance> d_dagger;
    std::optional<TaggedDistance> d_min;
    std::optional<bool> degenerate;
    std::string d_min_witness;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
    std::vector<std::string> generators;
    std::vector<std::string> logical_x;
    std::vector<std::string> logical_z;
    std::vector<std::string> notes;

    friend bool operator==(const CodeRecord &, const CodeRecord &) = default;
};

CodeRecord make_record(const StabilizerCode &code, const StandardForm *sf, const DistanceReport *report);

/// Key-sorted JSON, two-space indent, trailing newline.
std::string record_to_json(const CodeRecord &rec);
/// Throws MalformedRecord (including on a schema_version mismatch).
CodeRecord record_from_json(const std::string &text);

/// Rebuilds the code from the generator strings of a record.
StabilizerCode code_from_record(const CodeRecord &rec);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

}  // namespace qrstab
