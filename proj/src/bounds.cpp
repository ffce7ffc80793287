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

#include "qrstab/bounds.hpp"

#include <cmath>
#include <cstdio>

#include <boost/multiprecision/cpp_int.hpp>

#include "qrstab/error.hpp"

namespace qrstab {

namespace {

using boost::multiprecision::cpp_int;

cpp_int volume(std::size_t n, std::size_t upto) {
    cpp_int total = 0;
    cpp_int binom = 1;
    cpp_int pow3 = 1;
    for (std::size_t j = 0; j <= upto && j <= n; ++j) {
        total += pow3 * binom;
        binom = binom * (n - j) / (j + 1);
        pow3 *= 3;
    }
    return total;
}

cpp_int pow2(std::size_t e) {
    cpp_int v = 1;
    v <<= e;
    return v;
}

void check_args(std::size_t n, std::size_t k, std::size_t d) {
    if (d == 0) {
        throw Error(ErrorCode::InvalidArgument, "distance must be at least 1");
    }
    if (k > n) {
        throw Error(ErrorCode::InvalidArgument, "K exceeds N");
    }
}

std::size_t correctable(std::size_t d) { return (d - 1) / 2; }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

HammingResult hamming_bound(std::size_t n, std::size_t k, std::size_t d) {
    check_args(n, k, d);
    cpp_int lhs = volume(n, correctable(d));
    cpp_int rhs = pow2(n - k);
    return {lhs <= rhs, lhs == rhs};
}

bool gv_bound(std::size_t n, std::size_t k, std::size_t d) {
    check_args(n, k, d);
    return volume(n, 2 * correctable(d)) <= pow2(n - k);
}

bool css_gv_rate(std::size_t n, std::size_t k, std::size_t d) {
    check_args(n, k, d);
    double delta = static_cast<double>(correctable(d)) / static_cast<double>(n);
    double rate = static_cast<double>(k) / static_cast<double>(n);
    return rate - css_gv_rate_curve(delta) >= -1e-12;
}

bool singleton_bound(std::size_t n, std::size_t k, std::size_t d) {
    check_args(n, k, d);
    return n - k >= 4 * correctable(d);
}

bool singleton_tight(std::size_t n, std::size_t k, std::size_t d) {
    check_args(n, k, d);
    return n - k == 4 * correctable(d);
}

std::string weighted_volume(std::size_t n, std::size_t upto) { return volume(n, upto).str(); }

BoundsReport evaluate_bounds(std::size_t n, std::size_t k, std::size_t d) {
    check_args(n, k, d);
    BoundsReport r;
    r.n = n;
    r.k = k;
    r.d = d;
    r.t = correctable(d);
    r.delta_q = n == 0 ? 0.0 : static_cast<double>(r.t) / static_cast<double>(n);
    auto h = hamming_bound(n, k, d);
    r.hamming_ok = h.ok;
    r.hamming_tight = h.tight;
    r.gv_ok = gv_bound(n, k, d);
    r.css_gv_rate_ok = css_gv_rate(n, k, d);
    r.singleton_ok = singleton_bound(n, k, d);
    r.singleton_tight = singleton_tight(n, k, d);
    r.hamming_rate = hamming_rate_curve(r.delta_q);
    r.gv_rate = gv_rate_curve(r.delta_q);
    r.css_gv_rate = css_gv_rate_curve(r.delta_q);
    r.singleton_rate = singleton_rate_curve(r.delta_q);
    return r;
}

double h2(double x) {
    if (x <= 0.0 || x >= 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double hamming_rate_curve(double delta) { return 1.0 - delta * std::log2(3.0) - h2(delta); }
double gv_rate_curve(double delta) { return 1.0 - 2.0 * delta * std::log2(3.0) - h2(2.0 * delta); }
double css_gv_rate_curve(double delta) { return 1.0 - 2.0 * h2(2.0 * delta); }
double singleton_rate_curve(double delta) { return 1.0 - 4.0 * delta; }

std::vector<CurvePoint> asymptotic_curves(std::size_t resolution) {
    if (resolution < 2) {
        throw Error(ErrorCode::InvalidArgument, "resolution must be at least 2");
    }
    struct Curve {
        const char *name;
        double (*fn)(double);
    };
    static constexpr Curve kCurves[] = {{"hamming", hamming_rate_curve},
                                        {"gv", gv_rate_curve},
                                        {"css_gv", css_gv_rate_curve},
                                        {"singleton", singleton_rate_curve}};
    std::vector<CurvePoint> out;
    for (const auto &c : kCurves) {
        for (std::size_t i = 0; i < resolution; ++i) {
            double delta = 0.5 * static_cast<double>(i) / static_cast<double>(resolution - 1);
            out.push_back({c.name, delta, c.fn(delta)});
        }
    }
    return out;
}

std::string curves_csv(const std::vector<CurvePoint> &points) {
    std::string out = "bound_name,delta_q,rate\n";
    for (const auto &pt : points) {
        out += pt.bound_name + "," + format_double(pt.delta_q) + "," + format_double(pt.rate) + "\n";
    }
    return out;
}

double hamming_zero_rate_delta() {
    double lo = 1e-9;
    double hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (hamming_rate_curve(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qrstab
