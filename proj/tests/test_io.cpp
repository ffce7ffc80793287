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

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "qrstab/analysis.hpp"
#include "qrstab/error.hpp"
#include "qrstab/io.hpp"
#include "qrstab/symplectic.hpp"
#include "qrstab/type1.hpp"
#include "qrstab/type2.hpp"

using namespace qrstab;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Ok;
}

}  // namespace

TEST_CASE("alist round trip") {
    StabilizerCode code = build_qcs({classify_prime(7), QcsVariant::A, QcsLayout::H1Adj2,
                                     std::vector<std::size_t>{2, 3, 8, 11, 21}});
    std::string text = export_alist(code.h);
    CHECK(text.rfind("16 42\n", 0) == 0);
    CHECK(import_alist(text) == code.h);
    Gf2Matrix empty(3, 5);
    CHECK(import_alist(export_alist(empty)) == empty);
}

TEST_CASE("malformed alist") {
    CHECK(code_of([] { import_alist("2 3\n1"); }) == ErrorCode::MalformedAlist);
    CHECK(code_of([] { import_alist("x y\n"); }) == ErrorCode::MalformedAlist);
    CHECK(code_of([] { import_alist("1 1\n1 1\n1\n1\n1\n2\n"); }) == ErrorCode::MalformedAlist);
}

TEST_CASE("pauli list round trip") {
    StabilizerCode code = build_type1({classify_prime(13), Type1Variant::PlusForm, std::nullopt, false});
    std::string text = export_pauli(code.h);
    CHECK(import_pauli(text) == code.h);
    CHECK(code_of([] { import_pauli("XZ\nXZZ\n"); }) == ErrorCode::LengthMismatch);
    CHECK(code_of([] { import_pauli("XQ\n"); }) == ErrorCode::InvalidSymbol);
}

TEST_CASE("record round trip") {
    StabilizerCode code = build_type1({classify_prime(13), Type1Variant::PlusFormSwapped, std::nullopt, false});
    StandardForm sf = standard_form(code);
    DistanceReport rep = d_min(code);
    CodeRecord rec = make_record(code, &sf, &rep);
    CHECK(rec.N == 13);
    CHECK(rec.K == 1);
    CHECK(rec.d_min->value == 5);
    CHECK(rec.d_min->tag == "exact");
    CHECK(rec.d_dagger->value == 6);
    CHECK(rec.degenerate == false);
    CHECK(rec.logical_x == std::vector<std::string>{"IZIIZZZZIIZIX"});
    std::string json = record_to_json(rec);
    CodeRecord back = record_from_json(json);
    CHECK(back == rec);
    CHECK(record_to_json(back) == json);
    StabilizerCode again = code_from_record(back);
    CHECK(again.h == code.h);
    CHECK(again.k_logical == 1);
}

TEST_CASE("record keys are sorted") {
    CodeRecord rec = make_record(build_type1({classify_prime(7), Type1Variant::ResiduePair, std::nullopt, false}),
                                 nullptr, nullptr);
    std::string json = record_to_json(rec);
    std::vector<std::string> keys;
    for (std::size_t pos = json.find("\n  \""); pos != std::string::npos; pos = json.find("\n  \"", pos + 1)) {
        std::size_t start = pos + 4;
        keys.push_back(json.substr(start, json.find('"', start) - start));
    }
    CHECK(keys.size() > 10);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("malformed records") {
    CHECK(code_of([] { record_from_json("{"); }) == ErrorCode::MalformedRecord);
    CHECK(code_of([] { record_from_json("[]"); }) == ErrorCode::MalformedRecord);
    CodeRecord rec = make_record(build_type1({classify_prime(7), Type1Variant::ResiduePair, std::nullopt, false}),
                                 nullptr, nullptr);
    std::string json = record_to_json(rec);
    std::string bumped = json;
    bumped.replace(bumped.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
    CHECK(code_of([&] { record_from_json(bumped); }) == ErrorCode::MalformedRecord);
}

TEST_CASE("file helpers") {
    auto path = std::filesystem::temp_directory_path() / "qrstab_io_test.txt";
    write_file(path.string(), "hello\n");
    CHECK(read_file(path.string()) == "hello\n");
    std::filesystem::remove(path);
    CHECK(code_of([&] { read_file(path.string()); }) == ErrorCode::Io);
}
