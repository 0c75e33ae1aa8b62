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
#pragma once

#include <optional>
#include <string>

#include "vqpde/config.hpp"

namespace vqpde {

struct RunOptions {
    std::string output_dir;    // overrides the config output path
    bool oracle_only = false;  // run the classical twin only
    bool verify = false;       // informational; the twin is always compared
    std::optional<std::uint64_t> seed_override;
};

/// Runs one experiment: writes solutions.csv, metrics.csv and summary.txt
/// into the output directory and prints the summary line. Returns 0 on
/// success; non-converged steps produce warnings, not failures. Output is
/// byte-identical for identical config and seed.
int run_experiment(const ExperimentConfig &config, const RunOptions &options);

/// Expands the sweep lists, runs each configuration `runs` times with seeds
/// seed + 0 .. seed + runs - 1, and writes per-configuration statistics to
/// sweep_stats.csv. Reports the log-log slope of the mean evaluation count
/// against the parameter count when several parameter counts are present.
int run_sweep(const ExperimentConfig &config, const RunOptions &options);

/// Fixed-format floating point used for all CSV payloads.
std::string csv_double(double value);

} // namespace vqpde
