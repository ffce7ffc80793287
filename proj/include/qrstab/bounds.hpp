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
#include <string>
#include <vector>

namespace qrstab {

struct HammingResult {
    bool ok = false;
    bool tight = false;
};

/// sum_{j=0..t} 3^j C(N, j) <= 2^(N-K), t = floor((d-1)/2).
HammingResult hamming_bound(std::size_t n, std::size_t k, std::size_t d);
/// The finite GV inequality sum_{j=0..2t} 3^j C(N, j) <= 2^(N-K).
bool gv_bound(std::size_t n, std::size_t k, std::size_t d);
/// K/N >= 1 - 2 h2(2t/N), compared with a 1e-12 margin.
bool css_gv_rate(std::size_t n, std::size_t k, std::size_t d);
/// N - K >= 4t.
bool singleton_bound(std::size_t n, std::size_t k, std::size_t d);
bool singleton_tight(std::size_t n, std::size_t k, std::size_t d);

/// 3^j C(N, j) summed for j = 0..upto, as a decimal string.
std::string weighted_volume(std::size_t n, std::size_t upto);

struct BoundsReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t t = 0;
    double delta_q = 0.0;
    bool hamming_ok = false;
    bool hamming_tight = false;
    bool gv_ok = false;
    bool css_gv_rate_ok = false;
    bool singleton_ok = false;
    bool singleton_tight = false;
    double hamming_rate = 0.0;
    double gv_rate = 0.0;
    double css_gv_rate = 0.0;
    double singleton_rate = 0.0;
};

/// Throws InvalidArgument for d = 0 or K > N.
BoundsReport evaluate_bounds(std::size_t n, std::size_t k, std::size_t d);

/// Binary entropy with h2(0) = h2(1) = 0.
double h2(double x);

double hamming_rate_curve(double delta);
double gv_rate_curve(double delta);
double css_gv_rate_curve(double delta);
double singleton_rate_curve(double delta);

struct CurvePoint {
    std::string bound_name;
    double delta_q = 0.0;
    double rate = 0.0;
};

/// `resolution` evenly spaced delta values on [0, 1/2] for each of hamming, gv, css_gv, singleton.
std::vector<CurvePoint> asymptotic_curves(std::size_t resolution);

/// CSV with header "bound_name,delta_q,rate".
std::string curves_csv(const std::vector<CurvePoint> &points);

/// Root of 1 = delta log2(3) + h2(delta) on (0, 1/2), by bisection.
double hamming_zero_rate_delta();

}  // namespace qrstab
