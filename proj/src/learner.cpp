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

#include "qexact/learner.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

namespace qexact {

std::uint64_t PhaseLog::shots() const {
    std::uint64_t total = 0;
    for (const auto& s : stages) total += s.shots;
    return total;
}

std::uint64_t PhaseLog::errors_measured() const {
    std::uint64_t total = 0;
    for (const auto& s : stages) total += s.errors_measured;
    return total;
}

std::uint64_t TrainingResult::toggles() const {
    std::uint64_t total = 0;
    for (const auto& p : phases) total += p.toggled.size();
    return total;
}

unsigned TrainingResult::update_count() const {
    return static_cast<unsigned>(
        std::count_if(phases.begin(), phases.end(), [](const PhaseLog& p) { return !p.toggled.empty(); }));
}

unsigned default_phase_cap(unsigned n) { return 10 * n; }

double error_rate(const BooleanFunction& c, const BooleanFunction& h) {
    if (c.n() != h.n()) throw std::invalid_argument(fmt::format("dimension mismatch: {} vs {}", c.n(), h.n()));
    return static_cast<double>((c ^ h).count_ones()) / static_cast<double>(c.size());
}

namespace {

using UpdateRule = std::function<std::vector<Mask>(const PhaseLog&, std::span<const MeasurementOutcome>,
                                                   const Network&)>;

std::vector<Mask> distinct(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

TrainingResult train(const BooleanFunction& c, const AmplificationSetup& setup, const Schedule& schedule,
                     bool keep_corrects, const UpdateRule& update, Rng& rng, unsigned phase_cap) {
    if (phase_cap == 0) phase_cap = default_phase_cap(c.n());

    TrainingResult result;
    result.final_network = Network(c.n());
    result.terminated = Termination::phase_cap_hit;
    Network& net = result.final_network;

    for (unsigned phase = 0; phase < phase_cap; ++phase) {
        const AnalyticModel model(c, net.hypothesis(), setup);
        PhaseLog log;
        log.index = phase;
        std::vector<MeasurementOutcome> kept;
        std::vector<Mask> errors;
        std::vector<Mask> corrects;
        for (const auto& stage : schedule.stages) {
            const auto outcomes = sample(model.at(stage.m), stage.shots, rng);
            StageLog stage_log{stage.m, stage.shots, 0};
            for (const auto& o : outcomes) {
                if (o.readout) {
                    ++stage_log.errors_measured;
                    errors.push_back(o.x);
                    kept.push_back(o);
                } else if (keep_corrects) {
                    corrects.push_back(o.x);
                    kept.push_back(o);
                }
            }
            log.stages.push_back(stage_log);
        }
        log.recorded_errors = distinct(std::move(errors));
        log.recorded_corrects = distinct(std::move(corrects));
        result.total_shots += log.shots();

        if (log.recorded_errors.empty()) {
            result.phases.push_back(std::move(log));
            result.terminated = Termination::converged;
            break;
        }
        log.toggled = update(log, kept, net);
        net.toggle_distinct(log.toggled);
        result.phases.push_back(std::move(log));
    }

    result.final_error_rate = error_rate(c, net.hypothesis());
    return result;
}

// Generic learners toggle each distinct misclassified input.
std::vector<Mask> toggle_errors(const PhaseLog& log, std::span<const MeasurementOutcome>, const Network&) {
    return log.recorded_errors;
}

} // namespace

TrainingResult run_naive(const BooleanFunction& c, Rng& rng, unsigned phase_cap) {
    return train(c, AmplificationSetup::naive_direct(c.n()), naive_schedule(c.n()), false, toggle_errors, rng,
                 phase_cap);
}

TrainingResult run_improved(const BooleanFunction& c, Rng& rng, unsigned phase_cap) {
    return train(c, AmplificationSetup::improved(c.n()), generic_schedule(c.n()), false, toggle_errors, rng,
                 phase_cap);
}

TrainingResult run_refined(const BooleanFunction& c, unsigned m0, Rng& rng, unsigned phase_cap) {
    return train(c, AmplificationSetup::refined(c.n(), m0), refined_schedule(c.n(), m0), false, toggle_errors, rng,
                 phase_cap);
}

TrainingResult run_junta(const BooleanFunction& c, unsigned k, Rng& rng, unsigned phase_cap) {
    const auto rule = [](const PhaseLog&, std::span<const MeasurementOutcome> kept, const Network& net) {
        return junta_update(kept, net.active_gates());
    };
    return train(c, AmplificationSetup::junta(c.n(), k), junta_schedule(c.n(), k), true, rule, rng, phase_cap);
}

std::vector<Mask> junta_update(std::span<const MeasurementOutcome> measurements, const std::set<Mask>& actives) {
    if (measurements.empty()) return {};
    const unsigned n = measurements.front().x.n();

    std::vector<std::vector<Mask>> errors(n + 1);
    std::vector<std::vector<Mask>> corrects(n + 1);
    for (const auto& o : measurements) (o.readout ? errors : corrects)[o.x.weight()].push_back(o.x);

    std::vector<Mask> to_update;
    std::set<Mask> chosen;
    const auto add = [&](Mask u) {
        if (chosen.insert(u).second) to_update.push_back(u);
    };
    const auto covering = [&](Mask v) {
        return std::count_if(to_update.begin(), to_update.end(), [v](Mask u) { return monomial_eval(u, v); });
    };
    const auto take = [&](Mask v) {
        add(v);
        for (const auto& a : actives)
            if (monomial_eval(v, a)) add(a);
    };

    for (unsigned l = 0; l <= n; ++l) {
        for (const auto& e : errors[l])
            if (covering(e) % 2 == 0) take(e);
        for (const auto& ok : corrects[l])
            if (covering(ok) % 2 == 1) take(ok);
    }
    return to_update;
}

} // namespace qexact
