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

#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "qexact/qsim.hpp"
#include "qexact/schedule.hpp"

namespace qexact {

namespace {

using Amplitude = DenseCircuit::Amplitude;

Amplitude inner(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    Amplitude sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

// v <- v - 2 <r|v> r
void reflect(std::span<Amplitude> v, std::span<const Amplitude> r) {
    const Amplitude overlap = inner(r, v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= 2.0 * overlap * r[i];
}

// 2^{-n/2} sum_x |x, c(x)> over the (x, readout) register
std::vector<Amplitude> example_state(const BooleanFunction& c) {
    const unsigned n = c.n();
    std::vector<Amplitude> psi(std::size_t{1} << (n + 1), Amplitude{});
    const double amp = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
    for (std::uint32_t x = 0; x < c.size(); ++x) psi[basis_index(n, x, c.at(x), false)] = amp;
    return psi;
}

} // namespace

DenseCircuit::DenseCircuit(const BooleanFunction& c, const BooleanFunction& h, AmplificationSetup setup)
    : setup_(setup), h_(h) {
    setup_.validate();
    const unsigned n = setup_.n;
    if (n > kMaxDenseVariables)
        throw std::invalid_argument(fmt::format("dense backend limited to n <= {}, got {}", kMaxDenseVariables, n));
    if (c.n() != n || h.n() != n) throw std::invalid_argument("dimension mismatch between functions and setup");

    const std::vector<Amplitude> psi = example_state(c);
    reference_ = psi;
    if (setup_.variant == Variant::junta) {
        // A = [X_psi (X_{<=k} (x) I)]^p with X_psi = 2|psi><psi| - I
        const PreampPlan plan = preamp_plan(n, setup_.k);
        for (unsigned it = 0; it < plan.iterations; ++it) {
            for (std::size_t i = 0; i < reference_.size(); ++i) {
                const auto x = static_cast<std::uint32_t>(i & ((std::size_t{1} << n) - 1));
                if (static_cast<unsigned>(std::popcount(x)) <= setup_.k) reference_[i] = -reference_[i];
            }
            reflect(reference_, psi);
            for (auto& a : reference_) a = -a;
        }
    }

    state_.assign(std::size_t{1} << (n + 2), Amplitude{});
    std::copy(reference_.begin(), reference_.end(), state_.begin());  // rot = 0 half
    apply_network();
    if (setup_.has_rotation()) apply_rotation(setup_.rotation_angle());
}

void DenseCircuit::apply_network() {
    const unsigned n = setup_.n;
    for (std::uint32_t x = 0; x < h_.size(); ++x) {
        if (!h_.at(x)) continue;
        for (bool rot : {false, true})
            std::swap(state_[basis_index(n, x, false, rot)], state_[basis_index(n, x, true, rot)]);
    }
}

// y rotation on the rot qubit, controlled on readout = 1:
// |1,0> -> cos|1,0> + sin|1,1>, |1,1> -> -sin|1,0> + cos|1,1>
void DenseCircuit::apply_rotation(double angle) {
    const unsigned n = setup_.n;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        Amplitude& a0 = state_[basis_index(n, x, true, false)];
        Amplitude& a1 = state_[basis_index(n, x, true, true)];
        const Amplitude b0 = c * a0 - s * a1;
        const Amplitude b1 = s * a0 + c * a1;
        a0 = b0;
        a1 = b1;
    }
}

// Z on the last ancilla: rot for rotating variants, readout otherwise
void DenseCircuit::flip_marked_phase() {
    const unsigned n = setup_.n;
    const std::size_t bit = std::size_t{1} << (setup_.has_rotation() ? n + 1 : n);
    for (std::size_t i = 0; i < state_.size(); ++i)
        if (i & bit) state_[i] = -state_[i];
}

void DenseCircuit::reflect_about_reference() {
    const std::size_t half = reference_.size();
    std::span<Amplitude> rot0(state_.data(), half);
    std::span<Amplitude> rot1(state_.data() + half, half);
    if (setup_.reflection == ReflectionMode::joint_state) {
        // reference (x) |0_rot> has no rot = 1 component, so only the overlap changes
        reflect(rot0, reference_);
    } else {
        reflect(rot0, reference_);
        reflect(rot1, reference_);
    }
}

void DenseCircuit::amplify() {
    if (setup_.variant == Variant::naive_direct)
        throw std::invalid_argument("the direct circuit has no amplification rounds");
    // Q = -U X_a0 U^dagger X_G with U = CR T, applied right to left
    flip_marked_phase();
    if (setup_.has_rotation()) apply_rotation(-setup_.rotation_angle());
    apply_network();
    reflect_about_reference();
    apply_network();
    if (setup_.has_rotation()) apply_rotation(setup_.rotation_angle());
    ++rounds_;
}

std::vector<double> DenseCircuit::probabilities() const {
    std::vector<double> p(state_.size());
    for (std::size_t i = 0; i < state_.size(); ++i) p[i] = std::norm(state_[i]);
    return p;
}

std::vector<double> dense_distribution(const BooleanFunction& c, const BooleanFunction& h,
                                       const AmplificationSetup& setup, unsigned m) {
    DenseCircuit circuit(c, h, setup);
    for (unsigned i = 0; i < m; ++i) circuit.amplify();
    return circuit.probabilities();
}

} // namespace qexact
