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

#include "qrstab/gf2.hpp"
#include "qrstab/stabilizer_code.hpp"
#include "qrstab/symplectic.hpp"

namespace qrstab {

struct StandardForm {
    /// H after row operations and qubit swaps: (I A1 A2 | B 0 C2 ; 0 0 0 | D I E).
    Gf2Matrix matrix;
    /// Rank of the X half.
    std::size_t r = 0;
    /// permutation[j] is the original qubit now sitting at position j.
    std::vector<std::size_t> permutation;
    /// On original qubit labels.
    std::vector<SymplecticVector> logical_x;
    std::vector<SymplecticVector> logical_z;
};

StandardForm standard_form(const StabilizerCode &code);

/// True iff every logical commutes with every generator and X_i, Z_j anticommute exactly when i = j.
bool logical_relations_hold(const StabilizerCode &code, const StandardForm &sf);

enum class DistanceTag { Exact, Sampled, UpperBound };
const char *distance_tag_name(DistanceTag t) noexcept;

enum class DistanceMode { Auto, Exact, Bound };

struct DistanceOptions {
    DistanceMode mode = DistanceMode::Auto;
    /// Exact d_min when the normalizer dimension 2N - m is at most this.
    std::size_t exact_dual_limit = 30;
    /// Exact d-dagger when m is at most this.
    std::size_t exact_stabilizer_limit = 28;
    /// Candidate vectors examined by the bounded search.
    std::uint64_t budget = 10'000'000;
    std::uint64_t seed = 1;
    /// A bounded result u becomes exact when every operator of weight below u (at most this
    /// many) has been checked and none qualifies.
    std::uint64_t certify_limit = 50'000'000;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct DistanceValue {
    std::size_t value = 0;
    DistanceTag tag = DistanceTag::Exact;
    PauliString witness;
    std::uint64_t samples = 0;
};

struct DistanceReport {
    DistanceValue d_dagger;
    DistanceValue d_min;
    std::optional<bool> degenerate;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
};

/// Minimum weight of a nonzero stabilizer element.
DistanceValue d_dagger(const StabilizerCode &code, const DistanceOptions &opts = {});

/// Minimum weight over N(S) \ S; for K = 0 the minimum nonzero weight of S.
DistanceValue d_min_only(const StabilizerCode &code, const DistanceOptions &opts = {});

DistanceReport d_min(const StabilizerCode &code, const DistanceOptions &opts = {});

/// Throws InexactInputs unless both distances are exact.
bool classify_degeneracy(const DistanceReport &report);

/// Basis of the symplectic dual (normalizer) of the rows of h, stabilizer rows first.
Gf2Matrix normalizer_basis(const Gf2Matrix &h);

}  // namespace qrstab
