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
#include <set>
#include <span>
#include <vector>

#include "qexact/boolfun.hpp"
#include "qexact/qsim.hpp"
#include "qexact/rng.hpp"
#include "qexact/schedule.hpp"
#include "qexact/tnn.hpp"

namespace qexact {

struct StageLog {
    unsigned m = 0;
    std::uint64_t shots = 0;
    std::uint64_t errors_measured = 0;  // shots with readout 1
};

/// One update phase: measure every stage against a frozen hypothesis, then
/// toggle.
struct PhaseLog {
    unsigned index = 0;
    std::vector<StageLog> stages;
    std::vector<Mask> recorded_errors;    // distinct, ascending
    std::vector<Mask> recorded_corrects;  // junta learner only
    std::vector<Mask> toggled;

    std::uint64_t shots() const;
    std::uint64_t errors_measured() const;
};

enum class Termination { converged, phase_cap_hit };

struct TrainingResult {
    Network final_network{1};
    std::vector<PhaseLog> phases;
    std::uint64_t total_shots = 0;
    double final_error_rate = 0.0;
    Termination terminated = Termination::converged;

    std::uint64_t toggles() const;
    /// Phases that changed the network. A converged run ends with one clean
    /// phase that is not an update.
    unsigned update_count() const;
};

/// 10 n unless the caller overrides it.
unsigned default_phase_cap(unsigned n);

/// Direct sampling of T(h)|psi(c)>, floor(2^n ln 2^n) shots per phase.
TrainingResult run_naive(const BooleanFunction& c, Rng& rng, unsigned phase_cap = 0);

/// Amplified read-out with the 0, 1, 2, 4, ..., m_max schedule.
TrainingResult run_improved(const BooleanFunction& c, Rng& rng, unsigned phase_cap = 0);

/// Controlled-rotation variant. Any shot with readout 1 records its input,
/// whatever the rotation ancilla shows.
TrainingResult run_refined(const BooleanFunction& c, unsigned m0, Rng& rng, unsigned phase_cap = 0);

/// Positive k-junta learner: pre-amplified refined circuit with m0 = 2,
/// 2^k shots per stage, filter-lattice update rule.
TrainingResult run_junta(const BooleanFunction& c, unsigned k, Rng& rng, unsigned phase_cap = 0);

/// The filter-lattice update rule. Inputs are visited by increasing Hamming
/// weight, misclassified before correct within a weight. A misclassified
/// input joins the update set when it lies in the filters of an even number
/// of members already chosen; a correct input when that number is odd.
/// Either way, every active gate in its filter joins too. Returns the
/// distinct masks in the order they joined.
std::vector<Mask> junta_update(std::span<const MeasurementOutcome> measurements, const std::set<Mask>& actives);

/// |E(h)| / 2^n.
double error_rate(const BooleanFunction& c, const BooleanFunction& h);

} // namespace qexact
