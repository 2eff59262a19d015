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

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qsym/code5.hpp"
#include "qsym/errors.hpp"
#include "qsym/experiment.hpp"
#include "qsym/results.hpp"

namespace {

enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_OTHER = 1,
    EXIT_CONFIG = 2,
    EXIT_SIZE = 3,
    EXIT_IO = 4,
};

struct RunArgs {
    std::string experiment;
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<size_t> trials;
    std::string out;
    std::string format = "csv";
};

int run(const RunArgs &args) {
    qsym::ExperimentConfig config;
    if (!args.config_path.empty()) {
        config = qsym::load_config(args.config_path);
        if (!args.experiment.empty() && args.experiment != config.experiment_name) {
            throw qsym::ConfigError(
                "--experiment " + args.experiment + " conflicts with config experiment_name " +
                config.experiment_name);
        }
    } else if (!args.experiment.empty()) {
        config = qsym::default_config(args.experiment);
    } else {
        throw qsym::ConfigError("run needs --experiment or --config");
    }
    if (args.seed) {
        config.seed = *args.seed;
    }
    if (args.trials) {
        config.trials = *args.trials;
    }
    qsym::OutputFormat format = qsym::parse_output_format(args.format);
    qsym::ExperimentResult result = qsym::run_experiment(config);
    if (args.out.empty() || args.out == "-") {
        qsym::write_results(std::cout, result, format);
    } else {
        qsym::emit_results(result, format, args.out);
    }
    return EXIT_OK;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsym: replica symmetrization and five-qubit code simulations"};
    app.require_subcommand(1);

    RunArgs args;
    CLI::App *run_cmd = app.add_subcommand("run", "Run an experiment and write its results table");
    run_cmd->add_option("--experiment", args.experiment, "Experiment name (see `list`)");
    run_cmd->add_option("--config", args.config_path, "JSON config file using ExperimentConfig field names");
    run_cmd->add_option("--seed", args.seed, "Master seed");
    run_cmd->add_option("--trials", args.trials, "Number of trials");
    run_cmd->add_option("--out", args.out, "Output path; stdout when omitted or '-'");
    run_cmd->add_option("--format", args.format, "csv or json")->capture_default_str();

    CLI::App *list_cmd = app.add_subcommand("list", "Describe the experiment catalog");
    CLI::App *table_cmd = app.add_subcommand("table", "Print the five-qubit code syndrome table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_CONFIG;
    }

    try {
        if (run_cmd->parsed()) {
            return run(args);
        }
        if (list_cmd->parsed()) {
            std::cout << qsym::describe_experiments();
            return EXIT_OK;
        }
        if (table_cmd->parsed()) {
            std::cout << qsym::code5::format_syndrome_table();
            return EXIT_OK;
        }
    } catch (const qsym::SizeLimitError &e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return EXIT_SIZE;
    } catch (const qsym::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return EXIT_CONFIG;
    } catch (const qsym::IoError &e) {
        std::cerr << "io error: " << e.what() << "\n";
        return EXIT_IO;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_OTHER;
    }
    return EXIT_OTHER;
}
