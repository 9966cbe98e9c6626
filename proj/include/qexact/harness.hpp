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
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qexact/boolfun.hpp"
#include "qexact/learner.hpp"

namespace qexact {

inline constexpr std::uint64_t kDefaultSeed = 2024;

enum class LearnerKind { naive, improved, refined, junta };

std::string_view to_string(LearnerKind kind);
LearnerKind parse_learner(std::string_view text);
std::string_view to_string(Termination t);

/// Comma-separated integers and inclusive ranges, e.g. "4..8", "0,1,2,4"
/// or "2..n-1". Bounds written as "n" or "n-<d>" resolve against a given n.
class RangeList {
public:
    static RangeList parse(std::string_view text);
    static RangeList of(std::initializer_list<unsigned> values);

    /// Ascending distinct values; n is only consulted for relative bounds.
    std::vector<unsigned> resolve(unsigned n = 0) const;
    bool depends_on_n() const;
    std::string to_string() const;

private:
    struct Bound {
        bool relative = false;
        int value = 0;  // absolute value, or the offset added to n
    };
    struct Item {
        Bound lo;
        Bound hi;
    };
    std::vector<Item> items_;
};

enum class CampaignMode { generic, junta };
std::string_view to_string(CampaignMode mode);

struct CampaignConfig {
    CampaignMode mode = CampaignMode::generic;
    RangeList n_values = RangeList::of({4, 5, 6});
    RangeList k_values = RangeList::parse("2..n-1");  // junta only
    RangeList m0_values = RangeList::of({0, 1, 2, 3, 4});
    std::vector<LearnerKind> learners{LearnerKind::naive, LearnerKind::refined};  // generic only
    unsigned functions_per_cell = 16;
    unsigned repeats = 10;
    std::uint64_t base_seed = kDefaultSeed;
    unsigned phase_cap = 0;  // 0 selects 10 n
    std::filesystem::path out_dir;
    unsigned threads = 0;  // 0 selects QEXACT_THREADS or the hardware
    bool record_timing = false;

    void validate() const;
    std::string to_json() const;
};

/// One stage of one phase, as written to phases.csv.
struct PhaseRow {
    unsigned phase = 0;
    unsigned m = 0;
    std::uint64_t shots = 0;
    std::uint64_t errors_measured = 0;
    std::uint64_t toggled_count = 0;
};

struct RunRecord {
    std::uint64_t run_id = 0;
    LearnerKind mode = LearnerKind::naive;
    unsigned n = 0;
    std::optional<unsigned> k;
    std::optional<unsigned> m0;
    unsigned function_id = 0;
    unsigned repeat = 0;
    std::uint64_t seed = 0;
    unsigned phases = 0;
    std::uint64_t total_shots = 0;
    std::uint64_t toggles = 0;
    double final_error_rate = 0.0;
    Termination terminated = Termination::converged;
    std::uint64_t wall_ms = 0;
    std::vector<PhaseRow> phase_rows;

    /// Phases that changed the network.
    unsigned updates() const { return terminated == Termination::converged ? phases - 1 : phases; }
};

/// A target drawn for a campaign cell.
struct TargetRecord {
    CampaignMode family = CampaignMode::generic;
    unsigned n = 0;
    std::optional<unsigned> k;
    unsigned function_id = 0;
    BooleanFunction function{1};
};

struct CampaignResult {
    std::vector<TargetRecord> targets;
    std::vector<RunRecord> runs;  // ordered by run_id
};

/// Stable seed mixing: SplitMix64 folded over the identifiers in order.
/// Absent identifiers (no k, no m0) are passed as kNoId.
inline constexpr std::uint64_t kNoId = ~std::uint64_t{0};
std::uint64_t derive_seed(std::uint64_t base_seed, std::initializer_list<std::uint64_t> ids);

RunRecord to_record(const TrainingResult& result);

/// Runs the whole grid on a worker pool. Output is independent of the
/// thread count.
CampaignResult run_campaign(const CampaignConfig& cfg);

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs);
void write_phases_csv(std::ostream& out, const std::vector<RunRecord>& runs);
void write_targets_csv(std::ostream& out, const std::vector<TargetRecord>& targets);
std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path);

/// runs.csv, phases.csv, functions.csv and campaign.json under cfg.out_dir.
void write_campaign(const CampaignConfig& cfg, const CampaignResult& result);

/// schedule.csv (n,variant,m,shots) and schedule_totals.csv
/// (n,variant,total,naive_total,ratio) for naive, inc1, pow2 and refined:<m0>.
void write_schedule_report(const std::filesystem::path& out_dir, const std::vector<unsigned>& n_values,
                           const std::vector<unsigned>& m0_values);

struct ValidationRow {
    unsigned n = 0;
    std::string variant;
    std::optional<unsigned> m0;
    std::optional<unsigned> k;
    unsigned m = 0;
    double tv_distance = 0.0;  // worst case over the random pairs
    ReflectionMode mode = ReflectionMode::joint_state;
};

inline constexpr double kBackendTolerance = 1e-9;

/// Compares the analytic and statevector backends over improved,
/// refined(0|2|4) and junta(2|3) for every n in [1, n_max], every m up to
/// the variant's m_max, in both reflection modes.
std::vector<ValidationRow> validate_backends(unsigned n_max, unsigned pairs, std::uint64_t seed);
bool joint_state_within_tolerance(const std::vector<ValidationRow>& rows);
void write_validation_csv(std::ostream& out, const std::vector<ValidationRow>& rows);

struct FiguresReport {
    std::vector<std::filesystem::path> written;
    std::vector<std::string> missing;  // one message per figure lacking input
};

/// Schedule figures (fig_ratio, fig_Sm0) are computed directly for n in
/// [n_lo, n_hi]; fig_final_error, fig_mean_samples and fig_junta_updates
/// are derived from runs.csv in each input directory, concatenated in order
/// (typically one generic and one junta campaign).
FiguresReport reproduce_figures(const std::vector<std::filesystem::path>& in_dirs, const std::filesystem::path& out_dir,
                                unsigned n_lo = 4, unsigned n_hi = 20);

} // namespace qexact
