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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "qsym/experiment.hpp"
#include "json.hpp"

namespace qsym {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(const std::string &text);

/// Long-format table, one row per (trial, step, replica), followed by
/// "# summary,<key>,<value>" lines when there is at least one record.
void write_csv(std::ostream &out, const std::vector<TrialRecord> &records, const Summary &summary);

nlohmann::json config_to_json(const ExperimentConfig &config);
/// Missing fields keep the experiment's defaults. Unknown fields and
/// ill-typed values throw ConfigError.
ExperimentConfig config_from_json(const nlohmann::json &j);
ExperimentConfig load_config(const std::filesystem::path &path);

nlohmann::json result_to_json(const ExperimentResult &result);
ExperimentResult result_from_json(const nlohmann::json &j);

void write_results(std::ostream &out, const ExperimentResult &result, OutputFormat format);
/// Throws IoError when `path` cannot be written.
void emit_results(const ExperimentResult &result, OutputFormat format, const std::filesystem::path &path);

}  // namespace qsym
