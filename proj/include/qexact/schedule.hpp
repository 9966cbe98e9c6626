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

#pragma once

#include <cstdint>
#include <vector>

namespace qexact {

/// One stage of an update phase: m amplification rounds followed by
/// `shots` measurements.
struct StagePlan {
    unsigned m = 0;
    std::uint64_t shots = 1;

    friend bool operator==(const StagePlan&, const StagePlan&) = default;
};

enum class ScheduleVariant { naive, generic, refined, junta };

struct Schedule {
    ScheduleVariant variant = ScheduleVariant::generic;
    unsigned n = 1;
    unsigned m0 = 0;
    unsigned k = 0;
    std::vector<StagePlan> stages;

    std::vector<unsigned> rounds() const;
    std::uint64_t total_shots() const;
};

/// Pre-amplification toward inputs of Hamming weight at most k.
struct PreampPlan {
    unsigned k = 0;
    std::uint64_t n_leq_k = 0;  // sum_{j<=k} C(n, j)
    double phi = 0.0;           // arcsin(sqrt(n_leq_k / 2^n))
    unsigned iterations = 0;

    /// Probability mass on weight <= k inputs after the iterations.
    double low_weight_probability() const;
};

/// argmin over m >= 0 of |(2m+1) theta - pi/2|, scanning m up to
/// ceil(pi / (4 theta)) + 2 and resolving ties toward the smaller m.
unsigned best_rounds(double theta);

double theta_min(unsigned n);
unsigned m_max(unsigned n);

/// ceil(max(5, N ln N)); fractional shots round up.
std::uint64_t coupon_shots(double expected_errors);

StagePlan generic_stage(unsigned n, unsigned m);

/// Rounds 0, 1, 2, 4, ... capped by and ending at m_max(n).
Schedule generic_schedule(unsigned n);

/// Every m in [0, m_max(n)]; the increment-by-one variant.
Schedule incremental_schedule(unsigned n);

/// Rotation angle of the controlled rotation: pi / (2 (2 m0 + 1)).
double theta_m0(unsigned m0);

struct RefinedParams {
    double theta_min = 0.0;
    unsigned m_max = 0;
};

RefinedParams refined_params(unsigned n, unsigned m0);

/// N_{m,m0} = sin^2(pi / (2(2m+3))) 2^n / sin^2(theta_m0).
double refined_expected_errors(unsigned n, unsigned m0, unsigned m);
StagePlan refined_stage(unsigned n, unsigned m0, unsigned m);

/// m0, then powers of two above m0, ending at m_max_{m0}. With m0 = 0 this
/// is the generic schedule.
Schedule refined_schedule(unsigned n, unsigned m0);

/// Total shots of one refined update phase.
std::uint64_t refined_phase_shots(unsigned n, unsigned m0);

/// floor(2^n ln 2^n).
std::uint64_t naive_sample_count(unsigned n);

/// A single stage of floor(2^n ln 2^n) shots without amplification.
Schedule naive_schedule(unsigned n);

PreampPlan preamp_plan(unsigned n, unsigned k);

/// The k-junta learner's phase: the rounds of refined_schedule(n, 2), each
/// followed by exactly 2^k shots.
Schedule junta_schedule(unsigned n, unsigned k);

enum class RatioMode { inc1, pow2, refined };

struct RatioRow {
    unsigned n = 0;
    std::uint64_t total = 0;
    std::uint64_t naive_total = 0;
    double ratio = 0.0;
};

/// Phase shot totals relative to floor(2^n ln 2^n), for n in [n_lo, n_hi].
std::vector<RatioRow> figure_ratios(unsigned n_lo, unsigned n_hi, RatioMode mode, unsigned m0 = 0);

} // namespace qexact
