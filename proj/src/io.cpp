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

#include "qrstab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qrstab/error.hpp"
#include "qrstab/symplectic.hpp"

namespace qrstab {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::size_t> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    return lines;
}

[[noreturn]] void alist_error(std::size_t line, const std::string &what) {
    throw Error(ErrorCode::MalformedAlist, "alist line " + std::to_string(line) + ": " + what);
}

std::vector<std::size_t> parse_numbers(const std::vector<std::string> &lines, std::size_t idx) {
    if (idx >= lines.size()) {
        alist_error(idx + 1, "unexpected end of input");
    }
    std::vector<std::size_t> out;
    std::istringstream in(lines[idx]);
    std::string tok;
    while (in >> tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            alist_error(idx + 1, "expected a non-negative integer, got '" + tok + "'");
        }
        try {
            out.push_back(static_cast<std::size_t>(std::stoull(tok)));
        } catch (const std::exception &) {
            alist_error(idx + 1, "integer out of range: '" + tok + "'");
        }
    }
    return out;
}

std::vector<std::size_t> expect_count(const std::vector<std::string> &lines, std::size_t idx, std::size_t count) {
    auto v = parse_numbers(lines, idx);
    if (v.size() != count) {
        alist_error(idx + 1, "expected " + std::to_string(count) + " values, got " + std::to_string(v.size()));
    }
    return v;
}

std::string pauli_string_of_row(const Gf2Matrix &h, std::size_t r) { return to_pauli(row_vector(h, r)); }

}  // namespace

std::string export_alist(const Gf2Matrix &m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<std::size_t>> by_row(rows);
    std::vector<std::vector<std::size_t>> by_col(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (m.get(r, c)) {
                by_row[r].push_back(c + 1);
                by_col[c].push_back(r + 1);
            }
        }
    }
    std::size_t max_row = 0;
    std::size_t max_col = 0;
    std::vector<std::size_t> row_w;
    std::vector<std::size_t> col_w;
    for (const auto &v : by_row) {
        max_row = std::max(max_row, v.size());
        row_w.push_back(v.size());
    }
    for (const auto &v : by_col) {
        max_col = std::max(max_col, v.size());
        col_w.push_back(v.size());
    }
    std::string out = std::to_string(rows) + " " + std::to_string(cols) + "\n";
    out += std::to_string(max_row) + " " + std::to_string(max_col) + "\n";
    out += join(row_w) + "\n";
    out += join(col_w) + "\n";
    for (auto v : by_row) {
        v.resize(max_row, 0);
        out += join(v) + "\n";
    }
    for (auto v : by_col) {
        v.resize(max_col, 0);
        out += join(v) + "\n";
    }
    return out;
}

Gf2Matrix import_alist(const std::string &text) {
    auto lines = split_lines(text);
    auto dims = expect_count(lines, 0, 2);
    auto maxes = expect_count(lines, 1, 2);
    const std::size_t rows = dims[0];
    const std::size_t cols = dims[1];
    auto row_w = expect_count(lines, 2, rows);
    auto col_w = expect_count(lines, 3, cols);
    if (lines.size() < 4 + rows + cols) {
        alist_error(lines.size() + 1, "unexpected end of input");
    }
    for (std::size_t i = 4 + rows + cols; i < lines.size(); ++i) {
        if (lines[i].find_first_not_of(" \t") != std::string::npos) {
            alist_error(i + 1, "trailing content");
        }
    }
    if (rows > 0 && *std::max_element(row_w.begin(), row_w.end()) != maxes[0]) {
        alist_error(2, "max row weight does not match row weights");
    }
    if (cols > 0 && *std::max_element(col_w.begin(), col_w.end()) != maxes[1]) {
        alist_error(2, "max column weight does not match column weights");
    }

    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t line = 4 + r;
        auto idx = expect_count(lines, line, maxes[0]);
        for (std::size_t i = 0; i < maxes[0]; ++i) {
            if (i < row_w[r]) {
                if (idx[i] == 0 || idx[i] > cols) {
                    alist_error(line + 1, "column index " + std::to_string(idx[i]) + " out of range");
                }
                if (m.get(r, idx[i] - 1)) {
                    alist_error(line + 1, "repeated column index " + std::to_string(idx[i]));
                }
                m.set(r, idx[i] - 1, true);
            } else if (idx[i] != 0) {
                alist_error(line + 1, "expected zero padding");
            }
        }
    }
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t line = 4 + rows + c;
        auto idx = expect_count(lines, line, maxes[1]);
        std::size_t seen = 0;
        for (std::size_t i = 0; i < maxes[1]; ++i) {
            if (i < col_w[c]) {
                if (idx[i] == 0 || idx[i] > rows || !m.get(idx[i] - 1, c)) {
                    alist_error(line + 1, "column list disagrees with row lists");
                }
                ++seen;
            } else if (idx[i] != 0) {
                alist_error(line + 1, "expected zero padding");
            }
        }
        std::size_t actual = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            actual += m.get(r, c) ? 1 : 0;
        }
        if (actual != seen) {
            alist_error(line + 1, "column weight disagrees with row lists");
        }
    }
    return m;
}

std::string export_pauli(const Gf2Matrix &h) {
    std::string out;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        out += pauli_string_of_row(h, r) + "\n";
    }
    return out;
}

Gf2Matrix import_pauli(const std::string &text) {
    std::vector<std::string> ops;
    for (auto &line : split_lines(text)) {
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        ops.push_back(line);
    }
    if (ops.empty()) {
        return Gf2Matrix(0, 0);
    }
    const std::size_t n = ops[0].size();
    Gf2Matrix h(ops.size(), 2 * n);
    for (std::size_t r = 0; r < ops.size(); ++r) {
        if (ops[r].size() != n) {
            throw Error(ErrorCode::LengthMismatch, "generator " + std::to_string(r + 1) + " has length " +
                                                       std::to_string(ops[r].size()) + ", expected " +
                                                       std::to_string(n));
        }
        set_row_vector(h, r, from_pauli(ops[r]));
    }
    return h;
}

CodeRecord make_record(const StabilizerCode &code, const StandardForm *sf, const DistanceReport *report) {
    CodeRecord rec;
    rec.family = family_name(code.family);
    rec.variant = code.variant;
    rec.layout = code.layout;
    rec.p = code.p;
    rec.n = code.n;
    rec.k = code.k;
    rec.removed_rows = code.removed_rows;
    rec.N = code.n_qubits;
    rec.K = code.k_logical;
    rec.rank = code.m();
    rec.full_rank = code.full_rank;
    rec.notes = code.notes;
    for (std::size_t r = 0; r < code.m(); ++r) {
        rec.generators.push_back(pauli_string_of_row(code.h, r));
    }
    if (sf) {
        for (const auto &v : sf->logical_x) {
            rec.logical_x.push_back(to_pauli(v));
        }
        for (const auto &v : sf->logical_z) {
            rec.logical_z.push_back(to_pauli(v));
        }
    }
    std::string dist;
    if (report) {
        rec.d_dagger = TaggedDistance{report->d_dagger.value, distance_tag_name(report->d_dagger.tag)};
        rec.d_min = TaggedDistance{report->d_min.value, distance_tag_name(report->d_min.tag)};
        rec.degenerate = report->degenerate;
        rec.d_min_witness = report->d_min.witness;
        rec.seed = report->seed;
        rec.budget = report->budget;
        dist = "," + std::string(report->d_min.tag == DistanceTag::Exact ? "" : "<=") +
               std::to_string(report->d_min.value);
    }
    rec.name = "[[" + std::to_string(rec.N) + "," + std::to_string(rec.K) + dist + "]]";
    return rec;
}

std::string record_to_json(const CodeRecord &rec) {
    json j;
    j["schema_version"] = rec.schema_version;
    j["name"] = rec.name;
    j["family"] = rec.family;
    j["variant"] = rec.variant;
    j["layout"] = rec.layout;
    j["p"] = rec.p;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["removed_rows"] = rec.removed_rows;
    j["N"] = rec.N;
    j["K"] = rec.K;
    j["rank"] = rec.rank;
    j["full_rank"] = rec.full_rank;
    auto tagged = [](const std::optional<TaggedDistance> &d) {
        return d ? json{{"value", d->value}, {"tag", d->tag}} : json(nullptr);
    };
    j["d_dagger"] = tagged(rec.d_dagger);
    j["d_min"] = tagged(rec.d_min);
    j["degenerate"] = rec.degenerate ? json(*rec.degenerate) : json(nullptr);
    j["d_min_witness"] = rec.d_min_witness;
    j["seed"] = rec.seed ? json(*rec.seed) : json(nullptr);
    j["budget"] = rec.budget ? json(*rec.budget) : json(nullptr);
    j["generators"] = rec.generators;
    j["logical_x"] = rec.logical_x;
    j["logical_z"] = rec.logical_z;
    j["notes"] = rec.notes;
    return j.dump(2) + "\n";
}

CodeRecord record_from_json(const std::string &text) {
    try {
        json j = json::parse(text);
        CodeRecord rec;
        rec.schema_version = j.at("schema_version").get<int>();
        if (rec.schema_version != kSchemaVersion) {
            throw Error(ErrorCode::MalformedRecord, "unsupported schema_version " + std::to_string(rec.schema_version));
        }
        rec.name = j.at("name").get<std::string>();
        rec.family = j.at("family").get<std::string>();
        rec.variant = j.at("variant").get<std::string>();
        rec.layout = j.at("layout").get<std::string>();
        rec.p = j.at("p").get<std::uint32_t>();
        rec.n = j.at("n").get<std::uint32_t>();
        rec.k = j.at("k").get<std::uint32_t>();
        rec.removed_rows = j.at("removed_rows").get<std::vector<std::size_t>>();
        rec.N = j.at("N").get<std::size_t>();
        rec.K = j.at("K").get<std::size_t>();
        rec.rank = j.at("rank").get<std::size_t>();
        rec.full_rank = j.at("full_rank").get<std::size_t>();
        auto tagged = [](const json &d) -> std::optional<TaggedDistance> {
            if (d.is_null()) {
                return std::nullopt;
            }
            return TaggedDistance{d.at("value").get<std::size_t>(), d.at("tag").get<std::string>()};
        };
        rec.d_dagger = tagged(j.at("d_dagger"));
        rec.d_min = tagged(j.at("d_min"));
        if (!j.at("degenerate").is_null()) {
            rec.degenerate = j.at("degenerate").get<bool>();
        }
        rec.d_min_witness = j.at("d_min_witness").get<std::string>();
        if (!j.at("seed").is_null()) {
            rec.seed = j.at("seed").get<std::uint64_t>();
        }
        if (!j.at("budget").is_null()) {
            rec.budget = j.at("budget").get<std::uint64_t>();
        }
        rec.generators = j.at("generators").get<std::vector<std::string>>();
        rec.logical_x = j.at("logical_x").get<std::vector<std::string>>();
        rec.logical_z = j.at("logical_z").get<std::vector<std::string>>();
        rec.notes = j.at("notes").get<std::vector<std::string>>();
        return rec;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::MalformedRecord, std::string("code record: ") + e.what());
    }
}

StabilizerCode code_from_record(const CodeRecord &rec) {
    std::string text;
    for (const auto &g : rec.generators) {
        text += g + "\n";
    }
    Gf2Matrix h = rec.generators.empty() ? Gf2Matrix(0, 2 * rec.N) : import_pauli(text);
    if (h.cols() != 2 * rec.N) {
        throw Error(ErrorCode::MalformedRecord, "generator length does not match N");
    }
    StabilizerCode code = make_code(h);
    code.p = rec.p;
    code.n = rec.n;
    code.k = rec.k;
    code.variant = rec.variant;
    code.layout = rec.layout;
    code.removed_rows = rec.removed_rows;
    code.full_rank = rec.full_rank;
    code.notes = rec.notes;
    if (rec.family == "type1") {
        code.family = CodeFamily::TypeI;
    } else if (rec.family == "qcs-a") {
        code.family = CodeFamily::QcsA;
    } else if (rec.family == "qcs-b") {
        code.family = CodeFamily::QcsB;
    }
    return code;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot write " + path);
    }
    out << content;
    if (!out) {
        throw Error(ErrorCode::Io, "write failed for " + path);
    }
}

}  // namespace qrstab
