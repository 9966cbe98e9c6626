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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "qexact/qsim.hpp"
#include "qexact/schedule.hpp"

namespace qexact {

namespace {

constexpr double kMassTolerance = 1e-12;

double sin2(double a) {
    const double s = std::sin(a);
    return s * s;
}

double cos2(double a) {
    const double c = std::cos(a);
    return c * c;
}

void check_pair(const BooleanFunction& c, const BooleanFunction& h, const AmplificationSetup& setup) {
    setup.validate();
    if (c.n() != setup.n || h.n() != setup.n)
        throw std::invalid_argument(
            fmt::format("dimension mismatch: c has {}, h has {}, setup has {}", c.n(), h.n(), setup.n));
}

} // namespace

AmplificationSetup AmplificationSetup::naive_direct(unsigned n) { return {Variant::naive_direct, n, 0, 0, {}}; }

AmplificationSetup AmplificationSetup::improved(unsigned n) { return {Variant::improved, n, 0, 0, {}}; }

AmplificationSetup AmplificationSetup::refined(unsigned n, unsigned m0, ReflectionMode mode) {
    return {Variant::refined, n, m0, 0, mode};
}

AmplificationSetup AmplificationSetup::junta(unsigned n, unsigned k, unsigned m0, ReflectionMode mode) {
    return {Variant::junta, n, m0, k, mode};
}

double AmplificationSetup::rotation_angle() const {
    return has_rotation() ? theta_m0(m0) : std::numbers::pi / 2;
}

unsigned AmplificationSetup::max_rounds() const {
    switch (variant) {
    case Variant::naive_direct: return 0;
    case Variant::improved: return m_max(n);
    case Variant::refined:
    case Variant::junta: return refined_params(n, m0).m_max;
    }
    return 0;
}

void AmplificationSetup::validate() const {
    check_dimension(n);
    if (variant == Variant::junta && (k < 1 || k >= n))
        throw std::invalid_argument(fmt::format("junta arity {} outside [1, {})", k, n));
}

std::string AmplificationSetup::name() const {
    switch (variant) {
    case Variant::naive_direct: return "naive";
    case Variant::improved: return "improved";
    case Variant::refined: return fmt::format("refined({})", m0);
    case Variant::junta: return fmt::format("junta({},{})", k, m0);
    }
    return "?";
}

OutcomeDistribution::OutcomeDistribution(unsigned n, bool has_rotation, double good_probability,
                                         std::vector<OutcomeCell> cells)
    : n_(n), has_rotation_(has_rotation), good_(good_probability), cells_(std::move(cells)) {
    if (std::abs(total() - 1.0) > kMassTolerance)
        throw std::logic_error(fmt::format("outcome distribution has mass {}", total()));
}

double OutcomeDistribution::probability(OutcomeClass cls) const {
    double p = 0.0;
    for (const auto& cell : cells_)
        if (cell.cls == cls) p += cell.probability;
    return p;
}

double OutcomeDistribution::probability(OutcomeClass cls, Stratum stratum) const {
    double p = 0.0;
    for (const auto& cell : cells_)
        if (cell.cls == cls && cell.stratum == stratum) p += cell.probability;
    return p;
}

double OutcomeDistribution::readout_one_probability() const {
    return probability(OutcomeClass::marked_error) + probability(OutcomeClass::unmarked_error);
}

double OutcomeDistribution::total() const {
    double p = 0.0;
    for (const auto& cell : cells_) p += cell.probability;
    return p;
}

std::vector<double> OutcomeDistribution::expand() const {
    std::vector<double> out(std::size_t{1} << (n_ + 2), 0.0);
    for (const auto& cell : cells_) {
        const bool readout = cell.cls != OutcomeClass::correct;
        const bool rot = has_rotation_ && cell.cls == OutcomeClass::marked_error;
        const double p = cell.per_member();
        for (auto x : *cell.members) out[basis_index(n_, x, readout, rot)] += p;
    }
    return out;
}

AnalyticModel::AnalyticModel(const BooleanFunction& c, const BooleanFunction& h, AmplificationSetup setup)
    : setup_(setup) {
    check_pair(c, h, setup_);
    const unsigned n = setup_.n;
    const double size = std::ldexp(1.0, static_cast<int>(n));
    const BooleanFunction diff = c ^ h;

    const auto split = [&](auto&& in_stratum, Stratum stratum, double weight) {
        auto errors = std::make_shared<std::vector<std::uint32_t>>();
        auto corrects = std::make_shared<std::vector<std::uint32_t>>();
        for (std::uint32_t x = 0; x < diff.size(); ++x) {
            if (!in_stratum(x)) continue;
            (diff.at(x) ? errors : corrects)->push_back(x);
        }
        blocks_.push_back({stratum, weight, std::move(errors), std::move(corrects)});
    };

    if (setup_.variant == Variant::junta) {
        const PreampPlan plan = preamp_plan(n, setup_.k);
        const double angle = (2.0 * plan.iterations + 1.0) * plan.phi;
        const double low = static_cast<double>(plan.n_leq_k);
        const unsigned k = setup_.k;
        split([k](std::uint32_t x) { return static_cast<unsigned>(std::popcount(x)) <= k; }, Stratum::low_weight,
              sin2(angle) / low);
        split([k](std::uint32_t x) { return static_cast<unsigned>(std::popcount(x)) > k; }, Stratum::high_weight,
              cos2(angle) / (size - low));
    } else {
        split([](std::uint32_t) { return true; }, Stratum::all, 1.0 / size);
    }

    for (const auto& b : blocks_) error_weight_ += b.weight * static_cast<double>(b.errors->size());
    initial_good_ = std::min(1.0, sin2(setup_.rotation_angle()) * error_weight_);
}

std::size_t AnalyticModel::error_count() const noexcept {
    std::size_t count = 0;
    for (const auto& b : blocks_) count += b.errors->size();
    return count;
}

OutcomeDistribution AnalyticModel::at(unsigned m) const {
    if (setup_.variant == Variant::naive_direct && m != 0)
        throw std::invalid_argument("the direct circuit has no amplification rounds");

    const double attenuation = sin2(setup_.rotation_angle());
    if (initial_good_ > attenuation + kMassTolerance)
        throw std::logic_error(fmt::format("P11 = {} exceeds sin^2(theta_m0) = {}", initial_good_, attenuation));

    const double good =
        error_weight_ > 0.0 ? sin2((2.0 * m + 1.0) * std::asin(std::sqrt(initial_good_))) : 0.0;
    const double bad_norm = 1.0 - initial_good_;
    // bad-subspace scale; zero when every input is an error and nothing is left unmarked
    const double bad_scale = bad_norm > kMassTolerance ? (1.0 - good) / bad_norm : 0.0;
    const double unmarked = setup_.has_rotation() ? 1.0 - attenuation : 0.0;

    std::vector<OutcomeCell> cells;
    for (const auto& b : blocks_) {
        const double err_mass = b.weight * static_cast<double>(b.errors->size());
        const double ok_mass = b.weight * static_cast<double>(b.corrects->size());
        if (!b.errors->empty()) {
            cells.push_back({OutcomeClass::marked_error, b.stratum, good * err_mass / error_weight_, b.errors});
            if (setup_.has_rotation())
                cells.push_back({OutcomeClass::unmarked_error, b.stratum, bad_scale * err_mass * unmarked, b.errors});
        }
        if (!b.corrects->empty()) cells.push_back({OutcomeClass::correct, b.stratum, bad_scale * ok_mass, b.corrects});
    }
    return OutcomeDistribution(setup_.n, setup_.has_rotation(), good, std::move(cells));
}

OutcomeDistribution analytic_distribution(const BooleanFunction& c, const BooleanFunction& h,
                                          const AmplificationSetup& setup, unsigned m) {
    return AnalyticModel(c, h, setup).at(m);
}

std::vector<MeasurementOutcome> sample(const OutcomeDistribution& dist, std::uint64_t shots, Rng& rng) {
    std::vector<MeasurementOutcome> out;
    out.reserve(shots);
    const auto& cells = dist.cells();
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = rng.uniform() * dist.total();
        std::size_t pick = cells.size() - 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (u < cells[i].probability) {
                pick = i;
                break;
            }
            u -= cells[i].probability;
        }
        // skip trailing zero-mass cells left by rounding
        while (cells[pick].probability <= 0.0 && pick > 0) --pick;
        const auto& cell = cells[pick];
        const auto& members = *cell.members;
        const std::uint32_t x = members[rng.below(members.size())];
        MeasurementOutcome o{Mask(x, dist.n()), cell.cls != OutcomeClass::correct, std::nullopt};
        if (dist.has_rotation()) o.rot = cell.cls == OutcomeClass::marked_error;
        out.push_back(o);
    }
    return out;
}

std::vector<MeasurementOutcome> sample(const BooleanFunction& c, const BooleanFunction& h,
                                       const AmplificationSetup& setup, unsigned m, std::uint64_t shots, Rng& rng) {
    return sample(analytic_distribution(c, h, setup, m), shots, rng);
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("distributions differ in support size");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
    return 0.5 * sum;
}

} // namespace qexact
