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

#include "doctest.h"
#include "oracle.hpp"
#include "qrstab/analysis.hpp"
#include "qrstab/error.hpp"
#include "qrstab/stabilizer_code.hpp"
#include "qrstab/symplectic.hpp"
#include "qrstab/type1.hpp"
#include "qrstab/type2.hpp"

using namespace qrstab;

namespace {

StabilizerCode type1(std::uint32_t p, std::optional<Type1Variant> v = std::nullopt) {
    QrContext ctx = classify_prime(p);
    return build_type1({ctx, v.value_or(default_type1_variant(ctx)), std::nullopt, false});
}

StabilizerCode from_strings(const std::vector<std::string> &gens) {
    Gf2Matrix h(gens.size(), 2 * gens[0].size());
    for (std::size_t r = 0; r < gens.size(); ++r) {
        set_row_vector(h, r, from_pauli(gens[r]));
    }
    return make_code(h);
}

bool in_rowspace(const Gf2Matrix &h, const SymplecticVector &v) {
    Gf2Matrix ext(h.rows() + 1, h.cols());
    for (std::size_t r = 0; r < h.rows(); ++r) {
        set_row_vector(ext, r, row_vector(h, r));
    }
    set_row_vector(ext, h.rows(), v);
    return rank(ext) == rank(h);
}

bool is_logical(const StabilizerCode &code, const SymplecticVector &v) {
    for (std::size_t r = 0; r < code.m(); ++r) {
        if (symplectic_product(row_vector(code.h, r), v)) {
            return false;
        }
    }
    return !in_rowspace(code.h, v);
}

}  // namespace

TEST_CASE("standard form of the 13-qubit code") {
    StabilizerCode code = type1(13);
    StandardForm sf = standard_form(code);
    REQUIRE(sf.logical_x.size() == 1);
    CHECK(to_pauli(sf.logical_z[0]) == "ZZZZZZZZZZZZZ");
    CHECK(to_pauli(sf.logical_x[0]) == "IZIIZZZZIIZIX");
    CHECK(logical_relations_hold(code, sf));
}

TEST_CASE("logical operators satisfy the commutation relations") {
    std::vector<StabilizerCode> codes;
    for (std::uint32_t p : {5u, 7u, 13u, 23u, 29u, 31u}) {
        codes.push_back(type1(p));
    }
    for (std::uint32_t p : {7u, 11u, 19u}) {
        codes.push_back(build_qcs({classify_prime(p), QcsVariant::A, QcsLayout::Adj2H1, std::nullopt}));
    }
    for (std::uint32_t p : {5u, 13u, 17u}) {
        codes.push_back(build_qcs({classify_prime(p), QcsVariant::B, QcsLayout::H1Adj2, std::nullopt}));
    }
    for (const auto &code : codes) {
        StandardForm sf = standard_form(code);
        REQUIRE(sf.logical_x.size() == code.k_logical);
        CHECK(logical_relations_hold(code, sf));
        for (std::size_t i = 0; i < code.k_logical; ++i) {
            for (std::size_t j = 0; j < code.k_logical; ++j) {
                CHECK(symplectic_product(sf.logical_x[i], sf.logical_z[j]) == (i == j));
                CHECK(symplectic_product(sf.logical_x[i], sf.logical_x[j]) == 0);
                CHECK(symplectic_product(sf.logical_z[i], sf.logical_z[j]) == 0);
            }
            for (std::size_t r = 0; r < code.m(); ++r) {
                CHECK(symplectic_product(row_vector(code.h, r), sf.logical_x[i]) == 0);
                CHECK(symplectic_product(row_vector(code.h, r), sf.logical_z[i]) == 0);
            }
        }
    }
    StabilizerCode trivial = type1(11);
    CHECK(standard_form(trivial).logical_x.empty());
}

TEST_CASE("small distances are exact") {
    StabilizerCode c5 = type1(5);
    DistanceReport r5 = d_min(c5);
    CHECK(r5.d_min.value == 3);
    CHECK(r5.d_min.tag == DistanceTag::Exact);
    CHECK(r5.d_dagger.value == 4);
    CHECK_FALSE(classify_degeneracy(r5));

    DistanceReport r13 = d_min(type1(13));
    CHECK(r13.d_min.value == 5);
    CHECK(r13.d_dagger.value == 6);
    CHECK(r13.d_dagger.tag == DistanceTag::Exact);
    CHECK(r13.degenerate == false);

    DistanceReport r7 = d_min(type1(7));
    CHECK(r7.d_min.value == 2);
    CHECK(r7.d_dagger.value == 4);
    CHECK_FALSE(classify_degeneracy(r7));
}

TEST_CASE("published weight-five logical of the 13-qubit code") {
    StabilizerCode code = type1(13);
    SymplecticVector e = from_pauli("IXIYZIIIIIIZY");
    CHECK(weight(e) == 5);
    CHECK(is_logical(code, e));
}

TEST_CASE("degeneracy classification") {
    DistanceReport r;
    r.d_dagger = {2, DistanceTag::Exact, "", 0};
    r.d_min = {3, DistanceTag::Exact, "", 0};
    CHECK(classify_degeneracy(r));
    r.d_min.tag = DistanceTag::UpperBound;
    try {
        classify_degeneracy(r);
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InexactInputs);
    }
}

TEST_CASE("d-dagger of a single row is its weight") {
    StabilizerCode c = from_strings({"XXZZIY"});
    CHECK(d_dagger(c).value == 5);
}

TEST_CASE("normalizer basis") {
    for (std::uint32_t p : {5u, 7u, 13u}) {
        StabilizerCode code = type1(p);
        Gf2Matrix nb = normalizer_basis(code.h);
        CHECK(nb.rows() == 2 * code.n_qubits - code.m());
        CHECK(rank(nb) == nb.rows());
        for (std::size_t i = 0; i < nb.rows(); ++i) {
            for (std::size_t r = 0; r < code.m(); ++r) {
                CHECK(symplectic_product(row_vector(nb, i), row_vector(code.h, r)) == 0);
            }
        }
        for (std::size_t r = 0; r < code.m(); ++r) {
            CHECK(in_rowspace(nb, row_vector(code.h, r)));
        }
    }
}

TEST_CASE("coset search agrees with the increasing-weight oracle") {
    std::vector<StabilizerCode> codes = {type1(3), type1(5), type1(7), type1(7, Type1Variant::NonResiduePair),
                                         type1(5, Type1Variant::PlusForm)};
    QrContext c5 = classify_prime(5);
    codes.push_back(build_qcs({c5, QcsVariant::B, QcsLayout::H1Adj2, std::nullopt}));
    for (std::size_t a = 1; a <= 10; ++a) {
        codes.push_back(build_qcs({c5, QcsVariant::B, QcsLayout::H1Adj2, std::vector<std::size_t>{a}}));
        for (std::size_t b = a + 3; b <= 10; b += 3) {
            codes.push_back(build_qcs({c5, QcsVariant::B, QcsLayout::H1Adj2, std::vector<std::size_t>{a, b}}));
        }
    }
    codes.push_back(from_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
    codes.push_back(from_strings({"XXXX", "ZZZZ"}));
    codes.push_back(from_strings({"ZZI", "IZZ"}));
    for (const auto &code : codes) {
        DistanceValue v = d_min_only(code);
        CHECK(v.tag == DistanceTag::Exact);
        CHECK(v.value == oracle::increasing_weight_dmin(oracle::from_matrix(code.h), code.n_qubits));
        CHECK(d_dagger(code).value == oracle::span_min_weight(oracle::from_matrix(code.h), code.n_qubits));
        if (code.k_logical > 0) {
            CHECK(is_logical(code, from_pauli(v.witness)));
            CHECK(weight(from_pauli(v.witness)) == v.value);
        }
    }
}

TEST_CASE("bounded search returns a genuine logical operator") {
    DistanceOptions opts;
    opts.mode = DistanceMode::Bound;
    opts.budget = 200000;
    opts.certify_limit = 0;
    for (std::uint32_t p : {13u, 29u, 37u}) {
        StabilizerCode code = type1(p);
        DistanceValue v = d_min_only(code, opts);
        CHECK(v.tag == DistanceTag::UpperBound);
        SymplecticVector w = from_pauli(v.witness);
        CHECK(weight(w) == v.value);
        CHECK(is_logical(code, w));
    }
    StabilizerCode c13 = type1(13);
    CHECK(d_min_only(c13, opts).value >= 5);
}

TEST_CASE("certification upgrades small bounded results") {
    DistanceOptions opts;
    opts.mode = DistanceMode::Bound;
    DistanceValue v = d_min_only(type1(71), opts);
    CHECK(v.value == 2);
    CHECK(v.tag == DistanceTag::Exact);
}

TEST_CASE("exact mode refuses oversized searches") {
    DistanceOptions opts;
    opts.mode = DistanceMode::Exact;
    CHECK_THROWS_AS(d_min_only(type1(37), opts), Error);
}

TEST_CASE("results do not depend on thread count") {
    StabilizerCode code = type1(13);
    DistanceOptions one;
    one.threads = 1;
    DistanceOptions four;
    four.threads = 4;
    DistanceValue a = d_min_only(code, one);
    DistanceValue b = d_min_only(code, four);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    DistanceOptions bound1 = one, bound4 = four;
    bound1.mode = bound4.mode = DistanceMode::Bound;
    bound1.certify_limit = bound4.certify_limit = 0;
    bound1.budget = bound4.budget = 100000;
    StabilizerCode c37 = type1(37);
    CHECK(d_min_only(c37, bound1).value == d_min_only(c37, bound4).value);
}

TEST_CASE("trivial codes use the stabilizer weight") {
    StabilizerCode code = type1(11);
    CHECK(code.k_logical == 0);
    DistanceReport r = d_min(code);
    CHECK(r.d_min.value == r.d_dagger.value);
}

TEST_CASE("plus-form distance bounds for odd n") {
    for (std::uint32_t p : {13u}) {
        StabilizerCode code = type1(p);
        QrContext ctx = classify_prime(p);
        DistanceReport r = d_min(code);
        CHECK(r.d_dagger.value <= ctx.k);
        CHECK(r.d_min.value <= ctx.k - 1);
        CHECK(r.d_min.value >= 3);
    }
}
