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

#include "qexact/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace qexact {

namespace {

constexpr double kPi = std::numbers::pi;
// distances closer than this count as a tie
constexpr double kTieTolerance = 1e-12;

// Closed forms only; not bounded by the truth-table limit.
constexpr unsigned kMaxScheduleDimension = 40;

void check_n(unsigned n) {
    if (n < 1 || n > kMaxScheduleDimension)
        throw std::invalid_argument(fmt::format("dimension {} outside [1, {}]", n, kMaxScheduleDimension));
}

double two_pow(unsigned n) { return std::ldexp(1.0, static_cast<int>(n)); }

double sin2(double a) {
    const double s = std::sin(a);
    return s * s;
}

// sin^2(pi / (2(2m+3))), the lower edge of the error-fraction band handled
// by m rounds.
double band_floor(unsigned m) { return sin2(kPi / (2.0 * (2.0 * m + 3.0))); }

std::vector<unsigned> doubling_rounds(unsigned first, unsigned last) {
    std::vector<unsigned> rounds{first};
    unsigned p = 1;
    while (p <= first) p *= 2;
    for (; p < last; p *= 2) rounds.push_back(p);
    if (rounds.back() != last) rounds.push_back(last);
    return rounds;
}

} // namespace

std::vector<unsigned> Schedule::rounds() const {
    std::vector<unsigned> out;
    out.reserve(stages.size());
    for (const auto& s : stages) out.push_back(s.m);
    return out;
}

std::uint64_t Schedule::total_shots() const {
    std::uint64_t total = 0;
    for (const auto& s : stages) total += s.shots;
    return total;
}

double PreampPlan::low_weight_probability() const { return sin2((2.0 * iterations + 1.0) * phi); }

unsigned best_rounds(double theta) {
    if (!(theta > 0.0) || theta > kPi / 2)
        throw std::invalid_argument(fmt::format("angle {} outside (0, pi/2]", theta));
    const unsigned limit = static_cast<unsigned>(std::ceil(kPi / (4.0 * theta))) + 2;
    unsigned best = 0;
    double best_distance = std::abs(theta - kPi / 2);
    for (unsigned m = 1; m <= limit; ++m) {
        const double d = std::abs((2.0 * m + 1.0) * theta - kPi / 2);
        if (d < best_distance - kTieTolerance) {
            best = m;
            best_distance = d;
        }
    }
    return best;
}

double theta_min(unsigned n) {
    check_n(n);
    return std::asin(1.0 / std::sqrt(two_pow(n)));
}

unsigned m_max(unsigned n) { return best_rounds(theta_min(n)); }

std::uint64_t coupon_shots(double expected_errors) {
    const double s = expected_errors > 1.0 ? std::max(5.0, expected_errors * std::log(expected_errors)) : 5.0;
    return static_cast<std::uint64_t>(std::ceil(s));
}

StagePlan generic_stage(unsigned n, unsigned m) {
    if (m > m_max(n)) throw std::invalid_argument(fmt::format("m = {} exceeds m_max({}) = {}", m, n, m_max(n)));
    return {m, coupon_shots(band_floor(m) * two_pow(n))};
}

Schedule generic_schedule(unsigned n) {
    Schedule s{ScheduleVariant::generic, n, 0, 0, {}};
    for (unsigned m : doubling_rounds(0, m_max(n))) s.stages.push_back(generic_stage(n, m));
    return s;
}

Schedule incremental_schedule(unsigned n) {
    Schedule s{ScheduleVariant::generic, n, 0, 0, {}};
    for (unsigned m = 0; m <= m_max(n); ++m) s.stages.push_back(generic_stage(n, m));
    return s;
}

double theta_m0(unsigned m0) { return kPi / (2.0 * (2.0 * m0 + 1.0)); }

RefinedParams refined_params(unsigned n, unsigned m0) {
    check_n(n);
    const double theta = std::asin(std::sin(theta_m0(m0)) / std::sqrt(two_pow(n)));
    return {theta, best_rounds(theta)};
}

double refined_expected_errors(unsigned n, unsigned m0, unsigned m) {
    return band_floor(m) * two_pow(n) / sin2(theta_m0(m0));
}

StagePlan refined_stage(unsigned n, unsigned m0, unsigned m) {
    return {m, coupon_shots(refined_expected_errors(n, m0, m))};
}

Schedule refined_schedule(unsigned n, unsigned m0) {
    const auto params = refined_params(n, m0);
    if (params.m_max < m0)
        throw std::invalid_argument(fmt::format("m0 = {} exceeds m_max = {} at n = {}", m0, params.m_max, n));
    Schedule s{ScheduleVariant::refined, n, m0, 0, {}};
    for (unsigned m : doubling_rounds(m0, params.m_max)) s.stages.push_back(refined_stage(n, m0, m));
    return s;
}

std::uint64_t refined_phase_shots(unsigned n, unsigned m0) { return refined_schedule(n, m0).total_shots(); }

std::uint64_t naive_sample_count(unsigned n) {
    check_n(n);
    const double size = two_pow(n);
    return static_cast<std::uint64_t>(std::floor(size * std::log(size)));
}

Schedule naive_schedule(unsigned n) { return {ScheduleVariant::naive, n, 0, 0, {StagePlan{0, naive_sample_count(n)}}}; }

PreampPlan preamp_plan(unsigned n, unsigned k) {
    check_n(n);
    if (k < 1 || k >= n) throw std::invalid_argument(fmt::format("junta arity {} outside [1, {})", k, n));
    std::uint64_t count = 0;
    std::uint64_t binom = 1;  // C(n, j)
    for (unsigned j = 0; j <= k; ++j) {
        count += binom;
        binom = binom * (n - j) / (j + 1);
    }
    const double phi = std::asin(std::sqrt(static_cast<double>(count) / two_pow(n)));
    return {k, count, phi, best_rounds(phi)};
}

Schedule junta_schedule(unsigned n, unsigned k) {
    // preamp_plan validates k
    (void)preamp_plan(n, k);
    Schedule s = refined_schedule(n, 2);
    s.variant = ScheduleVariant::junta;
    s.k = k;
    for (auto& stage : s.stages) stage.shots = std::uint64_t{1} << k;
    return s;
}

std::vector<RatioRow> figure_ratios(unsigned n_lo, unsigned n_hi, RatioMode mode, unsigned m0) {
    std::vector<RatioRow> rows;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        std::uint64_t total = 0;
        switch (mode) {
        case RatioMode::inc1: total = incremental_schedule(n).total_shots(); break;
        case RatioMode::pow2: total = generic_schedule(n).total_shots(); break;
        case RatioMode::refined: total = refined_phase_shots(n, m0); break;
        }
        const std::uint64_t naive = naive_sample_count(n);
        rows.push_back({n, total, naive, static_cast<double>(total) / static_cast<double>(naive)});
    }
    return rows;
}

} // namespace qexact
