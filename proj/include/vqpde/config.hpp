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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqpde/grid.hpp"

namespace vqpde {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

enum class ExperimentKind {
    Heat1D,
    Heat2D,
    GrayScott,
    Brusselator,
    Cavity,
    Sweep
};

/// Flat key = value experiment description. Defaults reproduce the reference
/// studies; unknown keys are rejected. Sweeps accept comma lists for n,
/// layers and delta.
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Heat1D;

    Scheme scheme = Scheme::IE;
    int n = 3;
    int mx = 3, my = 3;
    int layers = 3;
    double delta = 1.0;
    double delta_x = 1.0, delta_y = 1.0;
    int n_t = 20;
    double dt = 0.05;
    double g_left = 1.0, g_right = 0.0;
    double g_x_low = 0.0, g_x_high = 0.0, g_y_low = 1.0, g_y_high = 0.0;
    std::string initial = "zero"; // zero | sin

    double d1 = 1e-4, d2 = 1e-6; // component diffusivities
    double k1 = 0.04, k2 = 0.02; // rate constants

    double reynolds = 100.0;
    double lid_velocity = 1.0;

    double tol = 1e-8;
    int max_evals = 10000;
    bool warm_start = true;
    std::uint64_t seed = 0;
    std::string output; // output directory (overridable on the command line)

    // Sweep-only fields.
    std::string target = "heat1d";
    std::vector<int> n_list;
    std::vector<int> layers_list;
    std::vector<double> delta_list;
    int runs = 25;
    // When positive, each sweep point keeps the physical horizon fixed:
    // dt scales as dt * (point delta / delta) and n_t = t_final / dt.
    double t_final = 0.0;
};

ExperimentConfig parse_config_text(const std::string &text);
ExperimentConfig parse_config_file(const std::string &path);

std::string experiment_name(ExperimentKind kind);

} // namespace vqpde
