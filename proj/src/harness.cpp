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

#include "qexact/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>

#include "qexact/csv.hpp"
#include "qexact/qsim.hpp"
#include "qexact/schedule.hpp"

namespace qexact {

namespace {

template <typename T>
std::string optional_field(const std::optional<T>& v) {
    return v ? fmt::format("{}", *v) : std::string{};
}

std::optional<unsigned> parse_optional(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return static_cast<unsigned>(std::stoul(text));
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error(fmt::format("write to {} failed", path.string()));
}

std::string_view to_string(ReflectionMode mode) {
    return mode == ReflectionMode::joint_state ? "joint_state" : "paper_literal";
}

unsigned worker_count(unsigned requested) {
    if (const char* env = std::getenv("QEXACT_THREADS"); env && *env) {
        const unsigned v = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        if (v > 0) return v;
    }
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

std::string_view to_string(LearnerKind kind) {
    switch (kind) {
    case LearnerKind::naive: return "naive";
    case LearnerKind::improved: return "improved";
    case LearnerKind::refined: return "refined";
    case LearnerKind::junta: return "junta";
    }
    return "?";
}

LearnerKind parse_learner(std::string_view text) {
    for (auto kind : {LearnerKind::naive, LearnerKind::improved, LearnerKind::refined, LearnerKind::junta})
        if (text == to_string(kind)) return kind;
    throw std::invalid_argument(fmt::format("unknown learner '{}'", text));
}

std::string_view to_string(CampaignMode mode) { return mode == CampaignMode::generic ? "generic" : "junta"; }

std::string_view to_string(Termination t) { return t == Termination::converged ? "converged" : "phase_cap_hit"; }

namespace {

Termination parse_termination(std::string_view text) {
    if (text == "converged") return Termination::converged;
    if (text == "phase_cap_hit") return Termination::phase_cap_hit;
    throw std::invalid_argument(fmt::format("unknown termination '{}'", text));
}

} // namespace

// ---------------------------------------------------------------------------
// RangeList

RangeList RangeList::parse(std::string_view text) {
    const auto fail = [&] { return std::invalid_argument(fmt::format("malformed range '{}'", text)); };
    const auto parse_bound = [&](std::string_view b) {
        Bound bound;
        if (b.empty()) throw fail();
        if (b.front() == 'n') {
            bound.relative = true;
            b.remove_prefix(1);
            if (b.empty()) return bound;
            if (b.front() != '-' && b.front() != '+') throw fail();
        }
        std::size_t used = 0;
        const std::string s(b);
        try {
            bound.value = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (used != s.size() || (!bound.relative && bound.value < 0)) throw fail();
        return bound;
    };

    RangeList list;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        if (const auto dots = piece.find(".."); dots != std::string_view::npos)
            list.items_.push_back({parse_bound(piece.substr(0, dots)), parse_bound(piece.substr(dots + 2))});
        else {
            const Bound b = parse_bound(piece);
            list.items_.push_back({b, b});
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return list;
}

RangeList RangeList::of(std::initializer_list<unsigned> values) {
    RangeList list;
    for (unsigned v : values) {
        const Bound b{false, static_cast<int>(v)};
        list.items_.push_back({b, b});
    }
    return list;
}

std::vector<unsigned> RangeList::resolve(unsigned n) const {
    const auto value = [n](Bound b) { return b.relative ? static_cast<int>(n) + b.value : b.value; };
    std::vector<unsigned> out;
    for (const auto& item : items_)
        for (int v = std::max(0, value(item.lo)); v <= value(item.hi); ++v) out.push_back(static_cast<unsigned>(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool RangeList::depends_on_n() const {
    return std::any_of(items_.begin(), items_.end(), [](const Item& i) { return i.lo.relative || i.hi.relative; });
}

std::string RangeList::to_string() const {
    const auto bound = [](Bound b) {
        if (!b.relative) return fmt::format("{}", b.value);
        if (b.value == 0) return std::string("n");
        return fmt::format("n{:+}", b.value);
    };
    std::vector<std::string> parts;
    for (const auto& item : items_) {
        const bool single = item.lo.relative == item.hi.relative && item.lo.value == item.hi.value;
        parts.push_back(single ? bound(item.lo) : bound(item.lo) + ".." + bound(item.hi));
    }
    return fmt::format("{}", fmt::join(parts, ","));
}

// ---------------------------------------------------------------------------
// Configuration

void CampaignConfig::validate() const {
    if (n_values.depends_on_n()) throw std::invalid_argument("the n range cannot refer to n");
    const auto ns = n_values.resolve();
    if (ns.empty()) throw std::invalid_argument("empty n range");
    for (unsigned n : ns) check_dimension(n);
    if (functions_per_cell < 1) throw std::invalid_argument("functions per cell must be at least 1");
    if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    if (mode == CampaignMode::generic) {
        if (learners.empty()) throw std::invalid_argument("no learners selected");
        for (auto l : learners)
            if (l == LearnerKind::junta) throw std::invalid_argument("the junta learner runs in junta mode");
        const bool refined = std::find(learners.begin(), learners.end(), LearnerKind::refined) != learners.end();
        if (refined && m0_values.resolve().empty()) throw std::invalid_argument("empty m0 set");
    } else {
        bool any = false;
        for (unsigned n : ns)
            for (unsigned k : k_values.resolve(n)) {
                if (k < 1 || k >= n)
                    throw std::invalid_argument(fmt::format("junta arity {} outside [1, {}) at n = {}", k, n, n));
                any = true;
            }
        if (!any) throw std::invalid_argument("empty k range");
    }
}

std::string CampaignConfig::to_json() const {
    nlohmann::ordered_json j;
    j["mode"] = std::string(qexact::to_string(mode));
    j["n"] = n_values.to_string();
    if (mode == CampaignMode::junta) {
        j["k"] = k_values.to_string();
    } else {
        j["m0"] = m0_values.to_string();
        std::vector<std::string> names;
        for (auto l : learners) names.emplace_back(qexact::to_string(l));
        j["learners"] = names;
    }
    j["functions_per_cell"] = functions_per_cell;
    j["repeats"] = repeats;
    j["base_seed"] = base_seed;
    j["phase_cap"] = phase_cap;
    j["record_timing"] = record_timing;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Campaign execution

std::uint64_t derive_seed(std::uint64_t base_seed, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t h = splitmix64(base_seed);
    for (auto id : ids) h = splitmix64(h ^ splitmix64(id));
    return h;
}

RunRecord to_record(const TrainingResult& result) {
    RunRecord r;
    r.phases = static_cast<unsigned>(result.phases.size());
    r.total_shots = result.total_shots;
    r.toggles = result.toggles();
    r.final_error_rate = result.final_error_rate;
    r.terminated = result.terminated;
    for (const auto& p : result.phases) {
        for (std::size_t s = 0; s < p.stages.size(); ++s) {
            const bool last = s + 1 == p.stages.size();
            r.phase_rows.push_back({p.index, p.stages[s].m, p.stages[s].shots, p.stages[s].errors_measured,
                                    last ? p.toggled.size() : 0});
        }
    }
    return r;
}

namespace {

// stream tags keep target draws and run draws apart
constexpr std::uint64_t kTargetStream = 1;
constexpr std::uint64_t kRunStream = 2;

struct Task {
    LearnerKind kind;
    unsigned n;
    std::optional<unsigned> k;
    std::optional<unsigned> m0;
    unsigned function_id;
    unsigned repeat;
    std::size_t target;
};

std::uint64_t opt_id(const std::optional<unsigned>& v) { return v ? *v : kNoId; }

RunRecord execute(const Task& task, const BooleanFunction& target, std::uint64_t base_seed, unsigned phase_cap,
                  bool record_timing) {
    const std::uint64_t seed =
        derive_seed(base_seed, {kRunStream, static_cast<std::uint64_t>(task.kind), task.n, opt_id(task.k),
                                opt_id(task.m0), task.function_id, task.repeat});
    Rng rng(seed);
    const auto start = std::chrono::steady_clock::now();
    TrainingResult result;
    switch (task.kind) {
    case LearnerKind::naive: result = run_naive(target, rng, phase_cap); break;
    case LearnerKind::improved: result = run_improved(target, rng, phase_cap); break;
    case LearnerKind::refined: result = run_refined(target, *task.m0, rng, phase_cap); break;
    case LearnerKind::junta: result = run_junta(target, *task.k, rng, phase_cap); break;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;

    RunRecord r = to_record(result);
    r.mode = task.kind;
    r.n = task.n;
    r.k = task.k;
    r.m0 = task.m0;
    r.function_id = task.function_id;
    r.repeat = task.repeat;
    r.seed = seed;
    if (record_timing)
        r.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    return r;
}

} // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    CampaignResult out;
    std::vector<Task> tasks;

    for (unsigned n : cfg.n_values.resolve()) {
        if (cfg.mode == CampaignMode::generic) {
            const std::size_t first = out.targets.size();
            for (unsigned f = 0; f < cfg.functions_per_cell; ++f) {
                Rng rng(derive_seed(cfg.base_seed, {kTargetStream, 0, n, kNoId, f}));
                out.targets.push_back({CampaignMode::generic, n, std::nullopt, f, BooleanFunction::random(n, rng)});
            }
            for (auto kind : cfg.learners) {
                std::vector<std::optional<unsigned>> m0s{std::nullopt};
                if (kind == LearnerKind::refined) {
                    m0s.clear();
                    for (unsigned m0 : cfg.m0_values.resolve()) m0s.emplace_back(m0);
                }
                for (const auto& m0 : m0s)
                    for (unsigned f = 0; f < cfg.functions_per_cell; ++f)
                        for (unsigned r = 0; r < cfg.repeats; ++r)
                            tasks.push_back({kind, n, std::nullopt, m0, f, r, first + f});
            }
        } else {
            for (unsigned k : cfg.k_values.resolve(n)) {
                const std::size_t first = out.targets.size();
                for (unsigned f = 0; f < cfg.functions_per_cell; ++f) {
                    Rng rng(derive_seed(cfg.base_seed, {kTargetStream, 1, n, k, f}));
                    out.targets.push_back({CampaignMode::junta, n, k, f, random_positive_kjunta(n, k, rng)});
                }
                for (unsigned f = 0; f < cfg.functions_per_cell; ++f)
                    for (unsigned r = 0; r < cfg.repeats; ++r)
                        tasks.push_back({LearnerKind::junta, n, k, std::nullopt, f, r, first + f});
            }
        }
    }

    out.runs.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors;
    const unsigned workers = std::min<std::size_t>(worker_count(cfg.threads), std::max<std::size_t>(1, tasks.size()));
    errors.resize(workers);
    const auto work = [&](unsigned w) {
        try {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                out.runs[i] = execute(tasks[i], out.targets[tasks[i].target].function, cfg.base_seed, cfg.phase_cap,
                                      cfg.record_timing);
                out.runs[i].run_id = i;
            }
        } catch (...) {
            errors[w] = std::current_exception();
            next = tasks.size();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// ---------------------------------------------------------------------------
// Persistence

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs) {
    CsvWriter csv(out);
    csv.write("run_id", "mode", "n", "k", "m0", "function_id", "repeat", "seed", "phases", "total_shots", "toggles",
              "final_error_rate", "terminated", "wall_ms");
    for (const auto& r : runs)
        csv.write(r.run_id, to_string(r.mode), r.n, optional_field(r.k), optional_field(r.m0), r.function_id, r.repeat,
                  r.seed, r.phases, r.total_shots, r.toggles, r.final_error_rate, to_string(r.terminated), r.wall_ms);
}

void write_phases_csv(std::ostream& out, const std::vector<RunRecord>& runs) {
    CsvWriter csv(out);
    csv.write("run_id", "phase", "m", "shots", "errors_measured", "toggled_count");
    for (const auto& r : runs)
        for (const auto& p : r.phase_rows) csv.write(r.run_id, p.phase, p.m, p.shots, p.errors_measured, p.toggled_count);
}

void write_targets_csv(std::ostream& out, const std::vector<TargetRecord>& targets) {
    CsvWriter csv(out);
    csv.write("family", "n", "k", "function_id", "relevant", "function");
    for (const auto& t : targets)
        csv.write(to_string(t.family), t.n, optional_field(t.k), t.function_id, relevant_variables(t.function).size(),
                  t.function.to_string());
}

std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    const auto col = [&](std::string_view name) { return table.column(name); };
    const std::size_t c_id = col("run_id"), c_mode = col("mode"), c_n = col("n"), c_k = col("k"), c_m0 = col("m0"),
                      c_f = col("function_id"), c_rep = col("repeat"), c_seed = col("seed"), c_ph = col("phases"),
                      c_shots = col("total_shots"), c_tog = col("toggles"), c_err = col("final_error_rate"),
                      c_term = col("terminated"), c_wall = col("wall_ms");
    std::vector<RunRecord> runs;
    runs.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        RunRecord r;
        r.run_id = std::stoull(row[c_id]);
        r.mode = parse_learner(row[c_mode]);
        r.n = static_cast<unsigned>(std::stoul(row[c_n]));
        r.k = parse_optional(row[c_k]);
        r.m0 = parse_optional(row[c_m0]);
        r.function_id = static_cast<unsigned>(std::stoul(row[c_f]));
        r.repeat = static_cast<unsigned>(std::stoul(row[c_rep]));
        r.seed = std::stoull(row[c_seed]);
        r.phases = static_cast<unsigned>(std::stoul(row[c_ph]));
        r.total_shots = std::stoull(row[c_shots]);
        r.toggles = std::stoull(row[c_tog]);
        r.final_error_rate = std::stod(row[c_err]);
        r.terminated = parse_termination(row[c_term]);
        r.wall_ms = std::stoull(row[c_wall]);
        runs.push_back(std::move(r));
    }
    return runs;
}

void write_campaign(const CampaignConfig& cfg, const CampaignResult& result) {
    std::filesystem::create_directories(cfg.out_dir);
    const auto emit = [&](const char* name, auto&& writer) {
        const auto path = cfg.out_dir / name;
        auto out = open_output(path);
        writer(out);
        finish(out, path);
    };
    emit("runs.csv", [&](std::ostream& o) { write_runs_csv(o, result.runs); });
    emit("phases.csv", [&](std::ostream& o) { write_phases_csv(o, result.runs); });
    emit("functions.csv", [&](std::ostream& o) { write_targets_csv(o, result.targets); });
    emit("campaign.json", [&](std::ostream& o) { o << cfg.to_json() << '\n'; });
}

void write_schedule_report(const std::filesystem::path& out_dir, const std::vector<unsigned>& n_values,
                           const std::vector<unsigned>& m0_values) {
    std::filesystem::create_directories(out_dir);
    const auto stages_path = out_dir / "schedule.csv";
    const auto totals_path = out_dir / "schedule_totals.csv";
    auto stages_out = open_output(stages_path);
    auto totals_out = open_output(totals_path);
    CsvWriter stages(stages_out);
    CsvWriter totals(totals_out);
    stages.write("n", "variant", "m", "shots");
    totals.write("n", "variant", "total", "naive_total", "ratio");

    for (unsigned n : n_values) {
        std::vector<std::pair<std::string, Schedule>> variants;
        variants.emplace_back("naive", naive_schedule(n));
        variants.emplace_back("inc1", incremental_schedule(n));
        variants.emplace_back("pow2", generic_schedule(n));
        for (unsigned m0 : m0_values) variants.emplace_back(fmt::format("refined:{}", m0), refined_schedule(n, m0));
        const std::uint64_t naive = naive_sample_count(n);
        for (const auto& [name, schedule] : variants) {
            for (const auto& s : schedule.stages) stages.write(n, name, s.m, s.shots);
            const std::uint64_t total = schedule.total_shots();
            totals.write(n, name, total, naive, static_cast<double>(total) / static_cast<double>(naive));
        }
    }
    finish(stages_out, stages_path);
    finish(totals_out, totals_path);
}

// ---------------------------------------------------------------------------
// Backend validation

std::vector<ValidationRow> validate_backends(unsigned n_max, unsigned pairs, std::uint64_t seed) {
    if (n_max > kMaxDenseVariables)
        throw std::invalid_argument(fmt::format("validation limited to n <= {}", kMaxDenseVariables));
    std::vector<ValidationRow> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<AmplificationSetup> setups{AmplificationSetup::improved(n)};
        for (unsigned m0 : {0u, 2u, 4u}) setups.push_back(AmplificationSetup::refined(n, m0));
        for (unsigned k : {2u, 3u})
            if (k < n) setups.push_back(AmplificationSetup::junta(n, k));

        for (auto setup : setups) {
            for (auto mode : {ReflectionMode::joint_state, ReflectionMode::paper_literal}) {
                setup.reflection = mode;
                const unsigned rounds = setup.max_rounds();
                std::vector<double> worst(rounds + 1, 0.0);
                Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(setup.variant), n, setup.m0, setup.k}));
                for (unsigned p = 0; p < pairs; ++p) {
                    const auto c = BooleanFunction::random(n, rng);
                    const auto h = BooleanFunction::random(n, rng);
                    const AnalyticModel model(c, h, setup);
                    DenseCircuit dense(c, h, setup);
                    for (unsigned m = 0; m <= rounds; ++m) {
                        if (m > 0) dense.amplify();
                        worst[m] = std::max(worst[m], total_variation(dense.probabilities(), model.at(m).expand()));
                    }
                }
                const bool rotates = setup.has_rotation();
                const bool junta = setup.variant == Variant::junta;
                const std::string name = setup.variant == Variant::improved ? "improved"
                                         : junta                            ? "junta"
                                                                            : "refined";
                for (unsigned m = 0; m <= rounds; ++m)
                    rows.push_back({n, name, rotates ? std::optional(setup.m0) : std::nullopt,
                                    junta ? std::optional(setup.k) : std::nullopt, m, worst[m], mode});
            }
        }
    }
    return rows;
}

bool joint_state_within_tolerance(const std::vector<ValidationRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ValidationRow& r) {
        return r.mode != ReflectionMode::joint_state || r.tv_distance < kBackendTolerance;
    });
}

void write_validation_csv(std::ostream& out, const std::vector<ValidationRow>& rows) {
    CsvWriter csv(out);
    csv.write("n", "variant", "m0", "k", "m", "tv_distance", "mode");
    for (const auto& r : rows)
        csv.write(r.n, r.variant, optional_field(r.m0), optional_field(r.k), r.m, r.tv_distance, to_string(r.mode));
}

// ---------------------------------------------------------------------------
// Figure data

FiguresReport reproduce_figures(const std::vector<std::filesystem::path>& in_dirs, const std::filesystem::path& out_dir,
                                unsigned n_lo, unsigned n_hi) {
    std::filesystem::create_directories(out_dir);
    FiguresReport report;
    const auto emit = [&](const char* name, auto&& writer) {
        const auto path = out_dir / name;
        auto out = open_output(path);
        CsvWriter csv(out);
        writer(csv);
        finish(out, path);
        report.written.push_back(path);
    };

    emit("fig_ratio.csv", [&](CsvWriter& csv) {
        csv.write("n", "inc1", "pow2");
        const auto inc1 = figure_ratios(n_lo, n_hi, RatioMode::inc1);
        const auto pow2 = figure_ratios(n_lo, n_hi, RatioMode::pow2);
        for (std::size_t i = 0; i < inc1.size(); ++i) csv.write(inc1[i].n, inc1[i].ratio, pow2[i].ratio);
    });
    emit("fig_Sm0.csv", [&](CsvWriter& csv) {
        csv.write("n", "m0", "ratio");
        for (unsigned n = n_lo; n <= n_hi; ++n)
            for (unsigned m0 = 0; m0 <= 4; ++m0)
                csv.write(n, m0, figure_ratios(n, n, RatioMode::refined, m0).front().ratio);
    });

    std::vector<RunRecord> runs;
    std::vector<std::string> absent;
    for (const auto& dir : in_dirs) {
        const auto path = dir / "runs.csv";
        if (!std::filesystem::exists(path)) {
            absent.push_back(path.string());
            continue;
        }
        auto part = read_runs_csv(path);
        runs.insert(runs.end(), part.begin(), part.end());
    }
    if (!absent.empty() || in_dirs.empty()) {
        const std::string what = in_dirs.empty() ? std::string("no input directory") : fmt::format("{}", fmt::join(absent, ", "));
        for (const char* fig : {"fig_final_error.csv", "fig_mean_samples.csv", "fig_junta_updates.csv"})
            report.missing.push_back(fmt::format("{}: missing input {}", fig, what));
        return report;
    }

    emit("fig_final_error.csv", [&](CsvWriter& csv) {
        csv.write("run_id", "mode", "n", "k", "m0", "function_id", "repeat", "final_error_rate");
        for (const auto& r : runs)
            csv.write(r.run_id, to_string(r.mode), r.n, optional_field(r.k), optional_field(r.m0), r.function_id,
                      r.repeat, r.final_error_rate);
    });

    const auto is_junta = [](const RunRecord& r) { return r.mode == LearnerKind::junta; };
    if (std::all_of(runs.begin(), runs.end(), is_junta))
        report.missing.push_back("fig_mean_samples.csv: no generic runs in the inputs");
    else
    emit("fig_mean_samples.csv", [&](CsvWriter& csv) {
        csv.write("n", "learner", "m0", "runs", "mean_shots");
        // (n, learner, m0) -> (count, sum)
        std::map<std::tuple<unsigned, int, std::uint64_t>, std::pair<std::uint64_t, double>> groups;
        for (const auto& r : runs) {
            if (r.mode == LearnerKind::junta) continue;
            auto& g = groups[{r.n, static_cast<int>(r.mode), opt_id(r.m0)}];
            ++g.first;
            g.second += static_cast<double>(r.total_shots);
        }
        for (const auto& [key, g] : groups) {
            const auto [n, mode, m0] = key;
            csv.write(n, to_string(static_cast<LearnerKind>(mode)), m0 == kNoId ? std::string{} : fmt::format("{}", m0),
                      g.first, g.second / static_cast<double>(g.first));
        }
    });

    if (std::none_of(runs.begin(), runs.end(), is_junta)) {
        report.missing.push_back(fmt::format("fig_junta_updates.csv: no junta runs in the inputs"));
        return report;
    }
    emit("fig_junta_updates.csv", [&](CsvWriter& csv) {
        csv.write("run_id", "n", "k", "function_id", "repeat", "updates");
        for (const auto& r : runs)
            if (r.mode == LearnerKind::junta) csv.write(r.run_id, r.n, optional_field(r.k), r.function_id, r.repeat, r.updates());
    });
    return report;
}

} // namespace qexact
