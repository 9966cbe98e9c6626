// Copyright 2026 The qexact Authors
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

// Independent reference computations used by the unit and acceptance tests.
// Each one is written from the defining formula, with no shared code path
// into the library beyond the value types.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include "qexact/boolfun.hpp"

namespace oracle {

using qexact::BooleanFunction;
using qexact::Mask;

inline bool subset(std::uint32_t u, std::uint32_t x) { return (u & x) == u; }

/// ANF coefficient of u = XOR of f over every x below u. O(4^n).
inline std::set<Mask> anf(const BooleanFunction& f) {
    std::set<Mask> out;
    const std::uint32_t size = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t u = 0; u < size; ++u) {
        bool coeff = false;
        for (std::uint32_t x = 0; x < size; ++x)
            if (subset(x, u)) coeff ^= f.at(x);
        if (coeff) out.insert(Mask(u, f.n()));
    }
    return out;
}

/// Pointwise XOR of monomials.
inline std::vector<int> expand(unsigned n, const std::set<Mask>& monomials) {
    std::vector<int> table(std::size_t{1} << n, 0);
    for (std::uint32_t x = 0; x < table.size(); ++x)
        for (const auto& u : monomials)
            if (subset(u.bits(), x)) table[x] ^= 1;
    return table;
}

/// argmin over m in [0, 100000] of |(2m+1) theta - pi/2|, first minimum wins
/// unless a later one is smaller by more than 1e-12.
inline unsigned argmin_rounds(double theta) {
    unsigned best = 0;
    double best_gap = std::abs(theta - std::numbers::pi / 2);
    for (unsigned m = 1; m <= 100000; ++m) {
        const double gap = std::abs((2.0 * m + 1.0) * theta - std::numbers::pi / 2);
        if (gap < best_gap - 1e-12) {
            best = m;
            best_gap = gap;
        }
    }
    return best;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::uint64_t low_weight_count(unsigned n, unsigned k) {
    std::uint64_t total = 0;
    for (std::uint32_t x = 0; x < (1u << n); ++x) total += static_cast<unsigned>(__builtin_popcount(x)) <= k;
    return total;
}

inline std::uint64_t stage_shots(double expected) {
    const double s = expected > 1.0 ? expected * std::log(expected) : 0.0;
    return static_cast<std::uint64_t>(std::ceil(std::max(5.0, s)));
}

/// Relevant variables by flipping every bit of every input.
inline std::set<unsigned> relevant(const BooleanFunction& f) {
    std::set<unsigned> out;
    for (std::uint32_t x = 0; x < f.size(); ++x)
        for (unsigned i = 0; i < f.n(); ++i)
            if (f.at(x) != f.at(x ^ (1u << i))) out.insert(i);
    return out;
}


/// Outcome probabilities from the closed-form amplification law, indexed like
/// qexact::basis_index. Variants: 0 improved, 1 refined(m0), 2 junta(k, m0).
inline std::vector<double> closed_form(const BooleanFunction& c, const BooleanFunction& h, int variant, unsigned m0,
                                       unsigned k, unsigned m) {
    const unsigned n = c.n();
    const double size = std::pow(2.0, n);
    const auto sq = [](double a) { return std::sin(a) * std::sin(a); };
    const double t0 = variant == 0 ? std::numbers::pi / 2 : std::numbers::pi / (2.0 * (2 * m0 + 1));

    std::vector<double> w(c.size(), 1.0 / size);
    if (variant == 2) {
        const double low = static_cast<double>(low_weight_count(n, k));
        const double phi = std::asin(std::sqrt(low / size));
        const double a = (2.0 * argmin_rounds(phi) + 1.0) * phi;
        for (std::uint32_t x = 0; x < c.size(); ++x)
            w[x] = static_cast<unsigned>(__builtin_popcount(x)) <= k ? sq(a) / low : (1.0 - sq(a)) / (size - low);
    }
    double we = 0.0;
    for (std::uint32_t x = 0; x < c.size(); ++x)
        if (c.at(x) != h.at(x)) we += w[x];
    const double p11 = sq(t0) * we;
    const double g = we > 0.0 ? sq((2.0 * m + 1.0) * std::asin(std::sqrt(p11))) : 0.0;

    std::vector<double> out(std::size_t{4} << n, 0.0);
    const auto at = [n](std::uint32_t x, bool r, bool rot) { return x | (std::size_t{r} << n) | (std::size_t{rot} << (n + 1)); };
    const double rest = 1.0 - p11 > 1e-12 ? (1.0 - g) / (1.0 - p11) : 0.0;
    for (std::uint32_t x = 0; x < c.size(); ++x) {
        if (c.at(x) != h.at(x)) {
            out[at(x, true, variant != 0)] += g * w[x] / we;
            if (variant != 0) out[at(x, true, false)] += rest * w[x] * (1.0 - sq(t0));
        } else {
            out[at(x, false, false)] += rest * w[x];
        }
    }
    return out;
}

} // namespace oracle
