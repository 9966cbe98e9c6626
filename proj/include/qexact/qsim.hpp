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

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qexact/boolfun.hpp"
#include "qexact/rng.hpp"

namespace qexact {

enum class Variant {
    naive_direct,  // measure T(h)|psi(c)> with no amplification
    improved,      // amplify the read-out qubit
    refined,       // controlled rotation onto a second ancilla, amplify |11>
    junta,         // refined circuit on a pre-amplified low-weight example state
};

enum class ReflectionMode {
    joint_state,    // reflect about |psi(c)>|0_rot>
    paper_literal,  // (I - 2|psi(c)><psi(c)|) tensored with identity on the rotation ancilla
};

/// Which circuit is simulated, with its derived parameters.
struct AmplificationSetup {
    Variant variant = Variant::improved;
    unsigned n = 1;
    unsigned m0 = 0;
    unsigned k = 0;
    ReflectionMode reflection = ReflectionMode::joint_state;

    static AmplificationSetup naive_direct(unsigned n);
    static AmplificationSetup improved(unsigned n);
    static AmplificationSetup refined(unsigned n, unsigned m0, ReflectionMode mode = ReflectionMode::joint_state);
    static AmplificationSetup junta(unsigned n, unsigned k, unsigned m0 = 2,
                                    ReflectionMode mode = ReflectionMode::joint_state);

    bool has_rotation() const noexcept { return variant == Variant::refined || variant == Variant::junta; }
    /// theta_{m0} for rotating variants, pi/2 otherwise (no attenuation).
    double rotation_angle() const;
    /// The variant's largest scheduled round count.
    unsigned max_rounds() const;
    void validate() const;
    std::string name() const;
};

/// One shot of the circuit.
struct MeasurementOutcome {
    Mask x;
    bool readout = false;
    std::optional<bool> rot;

    friend bool operator==(const MeasurementOutcome&, const MeasurementOutcome&) = default;
};

/// marked_error is the amplified class: readout 1 and, for rotating
/// variants, rot 1. unmarked_error is readout 1 with rot 0. correct is
/// readout 0 (and rot 0).
enum class OutcomeClass { marked_error, unmarked_error, correct };

/// Junta variants weight inputs by Hamming weight (<= k vs > k); every
/// other variant uses a single stratum.
enum class Stratum { all, low_weight, high_weight };

/// A block of outcomes sharing one class, one stratum, and hence one
/// per-input probability.
struct OutcomeCell {
    OutcomeClass cls = OutcomeClass::correct;
    Stratum stratum = Stratum::all;
    double probability = 0.0;
    std::shared_ptr<const std::vector<std::uint32_t>> members;

    double per_member() const { return members->empty() ? 0.0 : probability / static_cast<double>(members->size()); }
};

/// Measurement distribution stored by class rather than per outcome.
class OutcomeDistribution {
public:
    OutcomeDistribution(unsigned n, bool has_rotation, double good_probability, std::vector<OutcomeCell> cells);

    unsigned n() const noexcept { return n_; }
    bool has_rotation() const noexcept { return has_rotation_; }
    /// Probability of the amplified class after m rounds.
    double good_probability() const noexcept { return good_; }
    const std::vector<OutcomeCell>& cells() const noexcept { return cells_; }

    double probability(OutcomeClass cls) const;
    double probability(OutcomeClass cls, Stratum stratum) const;
    /// P(readout = 1).
    double readout_one_probability() const;
    double total() const;

    /// Dense probabilities indexed by basis_index(n, x, readout, rot).
    std::vector<double> expand() const;

private:
    unsigned n_;
    bool has_rotation_;
    double good_;
    std::vector<OutcomeCell> cells_;
};

/// Layout shared by both backends: x occupies bits [0, n), the read-out
/// bit is bit n and the rotation ancilla bit n + 1.
constexpr std::size_t basis_index(unsigned n, std::uint32_t x, bool readout, bool rot) {
    return std::size_t{x} | (std::size_t{readout} << n) | (std::size_t{rot} << (n + 1));
}

/// Closed-form backend. Classifies the inputs once for a (c, h, setup)
/// triple, after which each round count m costs O(1) to evaluate.
class AnalyticModel {
public:
    AnalyticModel(const BooleanFunction& c, const BooleanFunction& h, AmplificationSetup setup);

    const AmplificationSetup& setup() const noexcept { return setup_; }
    std::size_t error_count() const noexcept;
    /// Probability of the amplified class before any round (P1 or P11).
    double initial_good_probability() const noexcept { return initial_good_; }

    OutcomeDistribution at(unsigned m) const;

private:
    struct Block {
        Stratum stratum;
        double weight;  // per-input probability in the (pre-amplified) example state
        std::shared_ptr<const std::vector<std::uint32_t>> errors;
        std::shared_ptr<const std::vector<std::uint32_t>> corrects;
    };

    AmplificationSetup setup_;
    std::vector<Block> blocks_;
    double error_weight_ = 0.0;  // W_E
    double initial_good_ = 0.0;
};

OutcomeDistribution analytic_distribution(const BooleanFunction& c, const BooleanFunction& h,
                                          const AmplificationSetup& setup, unsigned m);

/// Independent draws from the distribution.
std::vector<MeasurementOutcome> sample(const OutcomeDistribution& dist, std::uint64_t shots, Rng& rng);
std::vector<MeasurementOutcome> sample(const BooleanFunction& c, const BooleanFunction& h,
                                       const AmplificationSetup& setup, unsigned m, std::uint64_t shots, Rng& rng);

/// Largest n accepted by the statevector backend.
inline constexpr unsigned kMaxDenseVariables = 12;

/// Statevector reference backend over n + 2 qubits. Applies the circuit
/// gate by gate: example-state preparation, optional pre-amplification,
/// T(h), the controlled rotation, then diffusion rounds.
class DenseCircuit {
public:
    using Amplitude = std::complex<double>;

    DenseCircuit(const BooleanFunction& c, const BooleanFunction& h, AmplificationSetup setup);

    /// Apply one diffusion round Q (global phase dropped).
    void amplify();
    unsigned rounds() const noexcept { return rounds_; }

    std::span<const Amplitude> amplitudes() const noexcept { return state_; }
    /// Born probabilities indexed by basis_index.
    std::vector<double> probabilities() const;

private:
    void apply_network();
    void apply_rotation(double angle);
    void flip_marked_phase();
    void reflect_about_reference();

    AmplificationSetup setup_;
    BooleanFunction h_;
    std::vector<Amplitude> reference_;  // over (x, readout), rot excluded
    std::vector<Amplitude> state_;
    unsigned rounds_ = 0;
};

std::vector<double> dense_distribution(const BooleanFunction& c, const BooleanFunction& h,
                                       const AmplificationSetup& setup, unsigned m);

/// Half the L1 distance between two distributions of equal length.
double total_variation(std::span<const double> p, std::span<const double> q);

} // namespace qexact
