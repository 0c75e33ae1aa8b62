// Copyright 2026 The vqpde Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vqpde/experiment.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    vqpde::RunOptions options;
    long seed = -1;
};

void add_common(CLI::App *cmd, CliArgs &args) {
    cmd->add_option("config", args.config_path, "experiment config file")
        ->required();
    cmd->add_option("--seed", args.seed, "override the config seed");
    cmd->add_option("--output-dir", args.options.output_dir,
                    "directory for CSV output");
    cmd->add_flag("--oracle-only", args.options.oracle_only,
                  "run the classical reference solver only");
    cmd->add_flag("--verify", args.options.verify,
                  "run both solvers and emit the trace-error column");
}

int execute(bool sweep, CliArgs &args) {
    if (args.seed >= 0) {
        args.options.seed_override = static_cast<std::uint64_t>(args.seed);
    }
    const vqpde::ExperimentConfig config =
        vqpde::parse_config_file(args.config_path);
    if (sweep != (config.experiment == vqpde::ExperimentKind::Sweep)) {
        throw vqpde::ConfigError(
            sweep ? "sweep command needs an experiment = sweep config"
                  : "use the sweep command for sweep configs");
    }
    return sweep ? vqpde::run_sweep(config, args.options)
                 : vqpde::run_experiment(config, args.options);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variational quantum evolution-equation experiment runner"};
    app.require_subcommand(1);

    CliArgs run_args;
    CliArgs sweep_args;
    CLI::App *run_cmd =
        app.add_subcommand("run", "run one experiment from a config file");
    add_common(run_cmd, run_args);
    CLI::App *sweep_cmd =
        app.add_subcommand("sweep", "run a parameter sweep with statistics");
    add_common(sweep_cmd, sweep_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            return execute(false, run_args);
        }
        return execute(true, sweep_args);
    } catch (const vqpde::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
