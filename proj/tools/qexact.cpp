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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qexact/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;

namespace fs = std::filesystem;
using namespace qexact;

struct CampaignOptions {
    std::string n;
    std::string k = "2..n-1";
    std::string m0 = "0..4";
    std::vector<std::string> learners{"naive", "refined"};
    unsigned functions = 16;
    unsigned repeats = 10;
    std::uint64_t seed = kDefaultSeed;
    unsigned phase_cap = 0;
    std::string out;
    bool paper_scale = false;
    bool timing = false;
};

void add_campaign_options(CLI::App* cmd, CampaignOptions& o, bool generic) {
    cmd->add_option("--n", o.n, "input dimensions, e.g. 4..8 or 4,6")->capture_default_str();
    if (generic) {
        cmd->add_option("--m0", o.m0, "refined offsets")->capture_default_str();
        cmd->add_option("--learners", o.learners, "naive, improved, refined")->delimiter(',')->capture_default_str();
    } else {
        cmd->add_option("--k", o.k, "junta arities; n may appear in bounds")->capture_default_str();
    }
    cmd->add_option("--functions", o.functions, "target functions per cell")->capture_default_str();
    cmd->add_option("--repeats", o.repeats, "trainings per target")->capture_default_str();
    cmd->add_option("--seed", o.seed, "base seed")->capture_default_str();
    cmd->add_option("--phase-cap", o.phase_cap, "phase limit per run (0: 10 n)")->capture_default_str();
    cmd->add_option("--out", o.out, "output directory")->required();
    cmd->add_flag("--paper-scale", o.paper_scale, "full grid: n up to 8 and 50 (generic) or 25 (junta) repeats");
    cmd->add_flag("--timing", o.timing, "record wall_ms (breaks byte-identical reruns)");
}

CampaignConfig make_config(const CLI::App* cmd, const CampaignOptions& o, bool generic) {
    CampaignConfig cfg;
    cfg.mode = generic ? CampaignMode::generic : CampaignMode::junta;
    std::string n = o.n;
    unsigned repeats = o.repeats;
    if (o.paper_scale) {
        if (cmd->count("--n") == 0) n = generic ? "4..8" : "5..8";
        if (cmd->count("--repeats") == 0) repeats = generic ? 50 : 25;
    }
    cfg.n_values = RangeList::parse(n);
    cfg.k_values = RangeList::parse(o.k);
    cfg.m0_values = RangeList::parse(o.m0);
    cfg.learners.clear();
    for (const auto& name : o.learners) cfg.learners.push_back(parse_learner(name));
    cfg.functions_per_cell = o.functions;
    cfg.repeats = repeats;
    cfg.base_seed = o.seed;
    cfg.phase_cap = o.phase_cap;
    cfg.out_dir = o.out;
    cfg.record_timing = o.timing;
    cfg.validate();
    return cfg;
}

int run_learn(const CLI::App* cmd, const CampaignOptions& o, bool generic) {
    CampaignConfig cfg;
    try {
        cfg = make_config(cmd, o, generic);
    } catch (const std::invalid_argument& e) {
        fmt::print(stderr, "invalid configuration: {}\n", e.what());
        return kExitInvalid;
    }
    const auto result = run_campaign(cfg);
    write_campaign(cfg, result);
    std::size_t capped = 0;
    for (const auto& r : result.runs) capped += r.terminated == Termination::phase_cap_hit;
    fmt::print("{} runs over {} targets written to {} ({} hit the phase cap)\n", result.runs.size(),
               result.targets.size(), cfg.out_dir.string(), capped);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact learning of Boolean functions with amplitude-amplified example oracles"};
    app.require_subcommand(1);

    CampaignOptions generic_opts;
    generic_opts.n = "4..6";
    auto* learn_generic = app.add_subcommand("learn-generic", "train on uniformly random Boolean functions");
    add_campaign_options(learn_generic, generic_opts, true);

    CampaignOptions junta_opts;
    junta_opts.n = "5..6";
    auto* learn_junta = app.add_subcommand("learn-junta", "train on random positive k-juntas");
    add_campaign_options(learn_junta, junta_opts, false);

    std::string schedule_n = "4..20";
    std::string schedule_m0 = "0..4";
    std::string schedule_out;
    auto* schedule = app.add_subcommand("schedule", "shot schedules and their totals against the naive count");
    schedule->add_option("--n", schedule_n, "input dimensions")->capture_default_str();
    schedule->add_option("--m0", schedule_m0, "refined offsets")->capture_default_str();
    schedule->add_option("--out", schedule_out, "output directory")->required();

    unsigned n_max = 5;
    unsigned pairs = 50;
    std::uint64_t validate_seed = kDefaultSeed;
    std::string validate_out;
    auto* validate = app.add_subcommand("validate", "compare the analytic and statevector backends");
    validate->add_option("--n-max", n_max, "largest input dimension")->capture_default_str();
    validate->add_option("--pairs", pairs, "random (target, hypothesis) pairs per setup")->capture_default_str();
    validate->add_option("--seed", validate_seed, "seed")->capture_default_str();
    validate->add_option("--out", validate_out, "output directory")->required();

    std::vector<std::string> figures_in;
    std::string figures_out;
    std::string figures_n = "4..20";
    auto* figures = app.add_subcommand("figures", "figure data from campaign outputs");
    figures->add_option("--in", figures_in, "campaign directories (repeatable)");
    figures->add_option("--out", figures_out, "output directory")->required();
    figures->add_option("--n", figures_n, "dimension range for the schedule figures")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*learn_generic) return run_learn(learn_generic, generic_opts, true);
        if (*learn_junta) return run_learn(learn_junta, junta_opts, false);

        if (*schedule) {
            std::vector<unsigned> ns, m0s;
            try {
                const auto range = RangeList::parse(schedule_n);
                if (range.depends_on_n()) throw std::invalid_argument("the n range cannot refer to n");
                ns = range.resolve();
                m0s = RangeList::parse(schedule_m0).resolve();
                if (ns.empty() || ns.front() < 1) throw std::invalid_argument("n must be at least 1");
            } catch (const std::invalid_argument& e) {
                fmt::print(stderr, "invalid configuration: {}\n", e.what());
                return kExitInvalid;
            }
            write_schedule_report(schedule_out, ns, m0s);
            fmt::print("schedule report for n in {}..{} written to {}\n", ns.front(), ns.back(), schedule_out);
            return kExitOk;
        }

        if (*validate) {
            if (n_max < 1 || n_max > kMaxDenseVariables || pairs < 1) {
                fmt::print(stderr, "invalid configuration: need 1 <= n-max <= {} and pairs >= 1\n", kMaxDenseVariables);
                return kExitInvalid;
            }
            const auto rows = validate_backends(n_max, pairs, validate_seed);
            fs::create_directories(validate_out);
            const auto path = fs::path(validate_out) / "validation.csv";
            std::ofstream out(path, std::ios::binary);
            write_validation_csv(out, rows);
            out.flush();
            if (!out) throw std::runtime_error(fmt::format("write to {} failed", path.string()));
            double joint = 0.0, literal = 0.0;
            for (const auto& r : rows)
                (r.mode == ReflectionMode::joint_state ? joint : literal) =
                    std::max(r.mode == ReflectionMode::joint_state ? joint : literal, r.tv_distance);
            fmt::print("worst TV distance: joint_state {:.3e}, paper_literal {:.3e}\n", joint, literal);
            if (!joint_state_within_tolerance(rows)) {
                fmt::print(stderr, "backend mismatch above {:.0e}\n", kBackendTolerance);
                return kExitInvalid;
            }
            return kExitOk;
        }

        if (*figures) {
            RangeList range;
            try {
                range = RangeList::parse(figures_n);
                if (range.depends_on_n() || range.resolve().empty()) throw std::invalid_argument("bad n range");
            } catch (const std::invalid_argument& e) {
                fmt::print(stderr, "invalid configuration: {}\n", e.what());
                return kExitInvalid;
            }
            const auto ns = range.resolve();
            std::vector<fs::path> dirs(figures_in.begin(), figures_in.end());
            const auto report = reproduce_figures(dirs, figures_out, ns.front(), ns.back());
            for (const auto& p : report.written) fmt::print("wrote {}\n", p.string());
            for (const auto& m : report.missing) fmt::print(stderr, "skipped {}\n", m);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        fmt::print(stderr, "invalid input: {}\n", e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitIo;
    }
    return kExitOk;
}
