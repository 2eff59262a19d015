// Copyright 2026 The qsym Authors
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
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "qsym/dynamics.hpp"
#include "qsym/noise.hpp"
#include "qsym/symmetry.hpp"

namespace qsym {

inline constexpr const char *ARTIFACT_VERSION = "0.1.0";

enum class RejectedPolicy { abort, discard_pair, spread_report };
enum class Schedule { round_robin, global };

struct ExperimentConfig {
    std::string experiment_name = "projection-prob";
    size_t R = 3;
    size_t L = 1;
    NoiseSpec noise;
    double omega = 100.0;
    double eta = 0.5;
    double epsilon = 0.0;
    PauliConvention convention = PauliConvention::standard;
    /// Final evolution time for zeno-drift.
    double time = 10.0;
    size_t steps = 2;
    size_t trials = 10000;
    uint64_t seed = 1;
    PairMode mode = PairMode::whole_block;
    RejectedPolicy rejected_policy = RejectedPolicy::discard_pair;
    Schedule schedule = Schedule::round_robin;
    /// A surviving replica whose fidelity to its ideal is below this is defective.
    double defect_threshold = 0.5;
    /// Real amplitudes of the ideal single-qubit (or logical) state.
    double ideal_alpha = 0.6;
    double ideal_beta = 0.8;

    bool operator==(const ExperimentConfig &) const = default;
};

/// One line of the long-format results table.
struct Row {
    size_t step = 0;
    size_t replica = 0;
    std::string event;
    /// 1 accepted, 0 rejected, -1 when no test touched this replica.
    int accept = -1;
    /// NaN for replicas that are no longer alive.
    double fidelity = std::numeric_limits<double>::quiet_NaN();
    size_t survivors = 0;
    size_t defective_survivors = 0;
};

struct TestLog {
    size_t first = 0;
    size_t second = 0;
    double probability = 0;
    bool accepted = false;

    bool operator==(const TestLog &) const = default;
};

/// Ground truth of one step, for post-analysis.
struct StepLog {
    size_t step = 0;
    std::vector<size_t> flipped;
    std::vector<double> angles;
    std::vector<TestLog> tests;

    bool operator==(const StepLog &) const = default;
};

struct TrialRecord {
    uint64_t trial = 0;
    std::vector<Row> rows;
    std::vector<double> final_fidelities;
    size_t survivors = 0;
    size_t defective_survivors = 0;
    std::vector<StepLog> log;
    /// Per-trial scalars the summary is built from (exact probabilities,
    /// oracle differences, ...).
    std::map<std::string, double> metrics;
};

struct Summary {
    std::string claim;
    std::map<std::string, double> values;

    bool operator==(const Summary &) const = default;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialRecord> records;
    Summary summary;
};

struct ExperimentInfo {
    std::string name;
    std::string claim;
    std::string parameters;
    ExperimentConfig defaults;
};

/// All six experiments, in a fixed order.
const std::vector<ExperimentInfo> &experiment_catalog();

/// Human-readable listing of the catalog.
std::string describe_experiments();

/// Defaults for a named experiment. Throws ConfigError for unknown names.
ExperimentConfig default_config(const std::string &experiment_name);

/// Throws ConfigError or SizeLimitError.
void validate(const ExperimentConfig &config);

/// One trial, seeded by trial_seed(config.seed, trial).
TrialRecord run_trial(const ExperimentConfig &config, uint64_t trial);

/// Validates, runs all trials and summarizes.
ExperimentResult run_experiment(const ExperimentConfig &config);

/// Recomputes the summary from records alone.
Summary summarize(const ExperimentConfig &config, const std::vector<TrialRecord> &records);

std::string to_string(PairMode mode);
std::string to_string(RejectedPolicy policy);
std::string to_string(Schedule schedule);
std::string to_string(PauliConvention convention);
std::string to_string(DriftAxis axis);
PairMode parse_pair_mode(const std::string &text);
RejectedPolicy parse_rejected_policy(const std::string &text);
Schedule parse_schedule(const std::string &text);
PauliConvention parse_convention(const std::string &text);
DriftAxis parse_drift_axis(const std::string &text);

}  // namespace qsym
