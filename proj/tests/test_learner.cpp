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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "qexact/learner.hpp"
#include "qexact/schedule.hpp"

using namespace qexact;

namespace {

Mask bits_of(const char* s) {
    unsigned bits = 0, n = 0;
    for (; s[n]; ++n)
        if (s[n] == '1') bits |= 1u << n;
    return Mask(bits, n);
}

MeasurementOutcome error(const char* s) { return {bits_of(s), true, std::nullopt}; }
MeasurementOutcome correct(const char* s) { return {bits_of(s), false, std::nullopt}; }

// The update rule over distinct inputs, written with plain sets:
// weight layers ascending, errors then corrects within a layer.
std::set<Mask> reference_update(const std::vector<MeasurementOutcome>& ms, const std::set<Mask>& actives) {
    std::set<Mask> errs, oks;
    for (const auto& m : ms) (m.readout ? errs : oks).insert(m.x);
    std::set<Mask> out;
    const auto count_below = [&](Mask v) {
        unsigned c = 0;
        for (const auto& u : out) c += oracle::subset(u.bits(), v.bits());
        return c;
    };
    const auto take = [&](Mask v) {
        out.insert(v);
        for (const auto& a : actives)
            if (oracle::subset(v.bits(), a.bits())) out.insert(a);
    };
    const unsigned n = ms.empty() ? 0 : ms.front().x.n();
    for (unsigned w = 0; w <= n; ++w) {
        for (const auto& e : errs)
            if (e.weight() == w && count_below(e) % 2 == 0) take(e);
        for (const auto& v : oks)
            if (v.weight() == w && count_below(v) % 2 == 1) take(v);
    }
    return out;
}

bool in_some_filter(Mask v, const std::set<Mask>& principals) {
    return std::any_of(principals.begin(), principals.end(), [v](Mask u) { return monomial_eval(u, v); });
}

} // namespace

TEST_CASE("error rate") {
    const auto parity2 = BooleanFunction::from_values(2, {0, 1, 1, 0});
    CHECK(error_rate(parity2, parity2) == 0.0);
    CHECK(error_rate(parity2, ~parity2) == 1.0);
    CHECK(error_rate(parity2, BooleanFunction(2)) == 0.5);
    CHECK_THROWS_AS(error_rate(parity2, BooleanFunction(3)), std::invalid_argument);
}

TEST_CASE("junta update on hand-traced inputs") {
    CHECK(junta_update({}, {}).empty());

    const std::vector<MeasurementOutcome> a{error("100"), correct("110")};
    CHECK(junta_update(a, {}) == std::vector<Mask>{bits_of("100"), bits_of("110")});

    const std::vector<MeasurementOutcome> b{error("110")};
    const auto out = junta_update(b, {bits_of("111")});
    CHECK(std::set<Mask>(out.begin(), out.end()) == std::set<Mask>{bits_of("110"), bits_of("111")});

    // a correct input outside every chosen filter is ignored
    const std::vector<MeasurementOutcome> c{error("100"), correct("010")};
    CHECK(junta_update(c, {}) == std::vector<Mask>{bits_of("100")});

    // an error covered by two chosen inputs is taken again
    const std::vector<MeasurementOutcome> d{error("100"), error("010"), error("110")};
    CHECK(junta_update(d, {}).size() == 3u);
    // covered once: skipped
    const std::vector<MeasurementOutcome> e{error("100"), error("110")};
    CHECK(junta_update(e, {}) == std::vector<Mask>{bits_of("100")});
}

TEST_CASE("junta update matches the transcription on random inputs") {
    Rng rng(101);
    for (unsigned n = 2; n <= 6; ++n)
        for (int t = 0; t < 200; ++t) {
            std::vector<MeasurementOutcome> ms;
            const auto shots = rng.below(12) + 1;
            for (std::uint64_t s = 0; s < shots; ++s)
                ms.push_back({Mask(static_cast<std::uint32_t>(rng.below(1u << n)), n), rng.bit(), std::nullopt});
            std::set<Mask> actives;
            for (std::uint32_t u = 0; u < (1u << n); ++u)
                if (rng.below(6) == 0) actives.insert(Mask(u, n));
            const auto got = junta_update(ms, actives);
            const std::set<Mask> as_set(got.begin(), got.end());
            CHECK(as_set.size() == got.size());
            CHECK(as_set == reference_update(ms, actives));
            // applying the list or the distinct set toggles the same network
            Network x(n), y(n);
            for (const auto& u : got) x.toggle(u);
            y.toggle_distinct(got);
            CHECK(x == y);
        }
}

TEST_CASE("naive learner") {
    Rng rng(1);
    const auto zero = run_naive(BooleanFunction(4), rng);
    CHECK(zero.phases.size() == 1u);
    CHECK(zero.toggles() == 0u);
    CHECK(zero.final_error_rate == 0.0);
    CHECK(zero.terminated == Termination::converged);
    CHECK(zero.total_shots == naive_sample_count(4));

    const auto c = BooleanFunction::random(4, rng);
    Rng a(9), b(9);
    const auto ra = run_naive(c, a), rb = run_naive(c, b);
    CHECK(ra.total_shots == rb.total_shots);
    CHECK(ra.final_network == rb.final_network);
    CHECK(ra.phases.size() == rb.phases.size());

    unsigned exact = 0;
    for (int t = 0; t < 40; ++t) exact += run_naive(c, rng).final_error_rate == 0.0;
    CHECK(exact >= 20u);
}

TEST_CASE("improved learner") {
    Rng rng(2);
    const auto zero = run_improved(BooleanFunction(5), rng);
    CHECK(zero.phases.size() == 1u);
    CHECK(zero.total_shots == generic_schedule(5).total_shots());

    for (unsigned u : {1u, 6u, 13u, 31u}) {
        const Mask mu(u, 5);
        const auto r = run_improved(monomial(mu), rng);
        CHECK(r.final_error_rate == 0.0);
        CHECK(r.terminated == Termination::converged);
        for (const auto& p : r.phases) CHECK(p.shots() == generic_schedule(5).total_shots());
        // first phase measures inside the filter of u only
        for (const auto& x : r.phases.front().recorded_errors) CHECK(monomial_eval(mu, x));
    }
}

TEST_CASE("refined learner") {
    Rng rng(3);
    const auto zero = run_refined(BooleanFunction(6), 2, rng);
    CHECK(zero.phases.size() == 1u);
    CHECK(zero.total_shots == refined_phase_shots(6, 2));
    CHECK(zero.phases.front().stages.size() == refined_schedule(6, 2).stages.size());

    for (unsigned m0 = 0; m0 <= 4; ++m0)
        for (int t = 0; t < 5; ++t) {
            const auto c = BooleanFunction::random(5, rng);
            const auto r = run_refined(c, m0, rng);
            CHECK(r.terminated == Termination::converged);
            CHECK(r.final_error_rate == 0.0);
            CHECK(r.phases.back().recorded_errors.empty());
            CHECK(r.total_shots == r.phases.size() * refined_phase_shots(5, m0));
            CHECK(r.final_network.hypothesis() == c);
        }
}

TEST_CASE("junta learner") {
    Rng rng(4);
    for (unsigned n = 4; n <= 6; ++n)
        for (unsigned k = 1; k < n; ++k)
            for (int t = 0; t < 4; ++t) {
                const auto c = random_positive_kjunta(n, k, rng);
                const auto principals = anf_of(c).monomials;
                const auto r = run_junta(c, k, rng);
                CHECK(r.terminated == Termination::converged);
                CHECK(r.final_error_rate == 0.0);
                const auto per_phase = junta_schedule(n, k).stages.size() << k;
                for (const auto& p : r.phases) {
                    CHECK(p.shots() == per_phase);
                    for (const auto& u : p.toggled) CHECK(in_some_filter(u, principals));
                }
                CHECK(r.update_count() + 1 == r.phases.size());
            }

    for (unsigned u : {3u, 5u, 12u, 7u}) {
        const Mask mu(u, 5);
        const auto r = run_junta(monomial(mu), mu.weight(), rng);
        CHECK(r.terminated == Termination::converged);
        CHECK(r.final_network.active_gates() == std::set<Mask>{mu});
        CHECK(anf_of(r.final_network.hypothesis()).monomials == std::set<Mask>{mu});
    }
}

TEST_CASE("phase cap is reported, not thrown") {
    Rng rng(5);
    const auto c = BooleanFunction::random(7, rng);
    const auto r = run_naive(c, rng, 1);
    CHECK(r.phases.size() == 1u);
    CHECK(r.terminated == Termination::phase_cap_hit);
    CHECK(r.final_error_rate > 0.0);
    CHECK(default_phase_cap(6) == 60u);
}

TEST_CASE("phase logs account for every shot") {
    Rng rng(6);
    const auto c = BooleanFunction::random(5, rng);
    for (const auto& r : {run_naive(c, rng), run_improved(c, rng), run_refined(c, 3, rng)}) {
        std::uint64_t total = 0;
        for (const auto& p : r.phases) {
            total += p.shots();
            CHECK(p.errors_measured() >= p.recorded_errors.size());
            CHECK(std::is_sorted(p.recorded_errors.begin(), p.recorded_errors.end()));
            CHECK(p.toggled == p.recorded_errors);
            CHECK(p.recorded_corrects.empty());
        }
        CHECK(total == r.total_shots);
    }
}
