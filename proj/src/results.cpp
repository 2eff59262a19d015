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

#include "qsym/results.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

using nlohmann::json;

const char *SEED_RULE =
    "trial k uses std::mt19937_64 seeded with splitmix64(seed ^ splitmix64(k)); "
    "uniform draws are (x >> 11) * 2^-53";

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Quotes a field only when it needs it.
std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

json nullable(double x) {
    if (std::isnan(x)) {
        return nullptr;
    }
    return x;
}

double from_nullable(const json &j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json row_to_json(const Row &row) {
    return json{
        {"step", row.step},
        {"replica", row.replica},
        {"event", row.event},
        {"accept", row.accept < 0 ? json(nullptr) : json(row.accept)},
        {"fidelity", nullable(row.fidelity)},
        {"survivors", row.survivors},
        {"defective_survivors", row.defective_survivors},
    };
}

Row row_from_json(const json &j) {
    Row row;
    row.step = j.at("step").get<size_t>();
    row.replica = j.at("replica").get<size_t>();
    row.event = j.at("event").get<std::string>();
    row.accept = j.at("accept").is_null() ? -1 : j.at("accept").get<int>();
    row.fidelity = from_nullable(j.at("fidelity"));
    row.survivors = j.at("survivors").get<size_t>();
    row.defective_survivors = j.at("defective_survivors").get<size_t>();
    return row;
}

json log_to_json(const StepLog &log) {
    json tests = json::array();
    for (const TestLog &t : log.tests) {
        tests.push_back(json{{"pair", {t.first, t.second}}, {"probability", t.probability}, {"accepted", t.accepted}});
    }
    return json{{"step", log.step}, {"flipped", log.flipped}, {"angles", log.angles}, {"tests", tests}};
}

StepLog log_from_json(const json &j) {
    StepLog log;
    log.step = j.at("step").get<size_t>();
    log.flipped = j.at("flipped").get<std::vector<size_t>>();
    log.angles = j.at("angles").get<std::vector<double>>();
    for (const json &t : j.at("tests")) {
        log.tests.push_back(TestLog{
            t.at("pair").at(0).get<size_t>(),
            t.at("pair").at(1).get<size_t>(),
            t.at("probability").get<double>(),
            t.at("accepted").get<bool>()});
    }
    return log;
}

json record_to_json(const TrialRecord &rec) {
    json rows = json::array();
    for (const Row &row : rec.rows) {
        rows.push_back(row_to_json(row));
    }
    json logs = json::array();
    for (const StepLog &log : rec.log) {
        logs.push_back(log_to_json(log));
    }
    return json{
        {"trial", rec.trial},
        {"rows", rows},
        {"final_fidelities", rec.final_fidelities},
        {"survivors", rec.survivors},
        {"defective_survivors", rec.defective_survivors},
        {"log", logs},
        {"metrics", rec.metrics},
    };
}

TrialRecord record_from_json(const json &j) {
    TrialRecord rec;
    rec.trial = j.at("trial").get<uint64_t>();
    for (const json &row : j.at("rows")) {
        rec.rows.push_back(row_from_json(row));
    }
    rec.final_fidelities = j.at("final_fidelities").get<std::vector<double>>();
    rec.survivors = j.at("survivors").get<size_t>();
    rec.defective_survivors = j.at("defective_survivors").get<size_t>();
    for (const json &log : j.at("log")) {
        rec.log.push_back(log_from_json(log));
    }
    rec.metrics = j.at("metrics").get<std::map<std::string, double>>();
    return rec;
}

}  // namespace

OutputFormat parse_output_format(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::csv;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    throw ConfigError("unknown format '" + text + "' (expected csv or json)");
}

void write_csv(std::ostream &out, const std::vector<TrialRecord> &records, const Summary &summary) {
    out << "trial,step,replica,event,accept,fidelity,survivors,defective_survivors\n";
    for (const TrialRecord &rec : records) {
        for (const Row &row : rec.rows) {
            out << rec.trial << ',' << row.step << ',' << row.replica << ',' << csv_field(row.event) << ',';
            if (row.accept >= 0) {
                out << row.accept;
            }
            out << ',';
            if (!std::isnan(row.fidelity)) {
                out << format_double(row.fidelity);
            }
            out << ',' << row.survivors << ',' << row.defective_survivors << '\n';
        }
    }
    if (records.empty()) {
        return;
    }
    out << "# summary,claim," << csv_field(summary.claim) << '\n';
    for (const auto &[key, value] : summary.values) {
        out << "# summary," << key << ',' << format_double(value) << '\n';
    }
}

json config_to_json(const ExperimentConfig &c) {
    return json{
        {"experiment_name", c.experiment_name},
        {"R", c.R},
        {"L", c.L},
        {"noise",
         {{"isolated_error_prob", c.noise.isolated_error_prob},
          {"drift_sigma", c.noise.drift_sigma},
          {"drift_axis", to_string(c.noise.drift_axis)}}},
        {"omega", c.omega},
        {"eta", c.eta},
        {"epsilon", c.epsilon},
        {"convention", to_string(c.convention)},
        {"time", c.time},
        {"steps", c.steps},
        {"trials", c.trials},
        {"seed", c.seed},
        {"mode", to_string(c.mode)},
        {"rejected_policy", to_string(c.rejected_policy)},
        {"schedule", to_string(c.schedule)},
        {"defect_threshold", c.defect_threshold},
        {"ideal_alpha", c.ideal_alpha},
        {"ideal_beta", c.ideal_beta},
    };
}

ExperimentConfig config_from_json(const json &j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    if (!j.contains("experiment_name")) {
        throw ConfigError("config is missing experiment_name");
    }
    static const std::set<std::string> known{
        "experiment_name", "R", "L", "noise", "omega", "eta", "epsilon", "convention", "time", "steps",
        "trials", "seed", "mode", "rejected_policy", "schedule", "defect_threshold", "ideal_alpha", "ideal_beta"};
    static const std::set<std::string> known_noise{"isolated_error_prob", "drift_sigma", "drift_axis"};
    for (const auto &[key, _] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown config field '" + key + "'");
        }
    }
    try {
        ExperimentConfig c = default_config(j.at("experiment_name").get<std::string>());
        auto read = [&j](const char *key, auto &field) {
            if (j.contains(key)) {
                j.at(key).get_to(field);
            }
        };
        read("R", c.R);
        read("L", c.L);
        read("omega", c.omega);
        read("eta", c.eta);
        read("epsilon", c.epsilon);
        read("time", c.time);
        read("steps", c.steps);
        read("trials", c.trials);
        read("seed", c.seed);
        read("defect_threshold", c.defect_threshold);
        read("ideal_alpha", c.ideal_alpha);
        read("ideal_beta", c.ideal_beta);
        if (j.contains("convention")) {
            c.convention = parse_convention(j.at("convention").get<std::string>());
        }
        if (j.contains("mode")) {
            c.mode = parse_pair_mode(j.at("mode").get<std::string>());
        }
        if (j.contains("rejected_policy")) {
            c.rejected_policy = parse_rejected_policy(j.at("rejected_policy").get<std::string>());
        }
        if (j.contains("schedule")) {
            c.schedule = parse_schedule(j.at("schedule").get<std::string>());
        }
        if (j.contains("noise")) {
            const json &n = j.at("noise");
            if (!n.is_object()) {
                throw ConfigError("noise must be an object");
            }
            for (const auto &[key, _] : n.items()) {
                if (!known_noise.contains(key)) {
                    throw ConfigError("unknown noise field '" + key + "'");
                }
            }
            if (n.contains("isolated_error_prob")) {
                n.at("isolated_error_prob").get_to(c.noise.isolated_error_prob);
            }
            if (n.contains("drift_sigma")) {
                n.at("drift_sigma").get_to(c.noise.drift_sigma);
            }
            if (n.contains("drift_axis")) {
                c.noise.drift_axis = parse_drift_axis(n.at("drift_axis").get<std::string>());
            }
        }
        return c;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

json result_to_json(const ExperimentResult &result) {
    json records = json::array();
    for (const TrialRecord &rec : result.records) {
        records.push_back(record_to_json(rec));
    }
    return json{
        {"artifact_version", ARTIFACT_VERSION},
        {"seed_rule", SEED_RULE},
        {"config", config_to_json(result.config)},
        {"records", records},
        {"summary", {{"claim", result.summary.claim}, {"values", result.summary.values}}},
    };
}

ExperimentResult result_from_json(const json &j) {
    try {
        ExperimentResult result;
        result.config = config_from_json(j.at("config"));
        for (const json &rec : j.at("records")) {
            result.records.push_back(record_from_json(rec));
        }
        result.summary.claim = j.at("summary").at("claim").get<std::string>();
        result.summary.values = j.at("summary").at("values").get<std::map<std::string, double>>();
        return result;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed result document: ") + e.what());
    }
}

void write_results(std::ostream &out, const ExperimentResult &result, OutputFormat format) {
    if (format == OutputFormat::csv) {
        write_csv(out, result.records, result.summary);
    } else {
        out << result_to_json(result).dump(1) << '\n';
    }
}

void emit_results(const ExperimentResult &result, OutputFormat format, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    write_results(out, result, format);
    out.flush();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

}  // namespace qsym
