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
#include "vqpde/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "vqpde/evolution.hpp"
#include "vqpde/navier_stokes.hpp"
#include "vqpde/reaction_diffusion.hpp"

namespace vqpde {

std::string csv_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

namespace fs = std::filesystem;

struct ExperimentOutput {
    std::vector<std::string> components;
    std::vector<std::vector<Eigen::VectorXd>> snapshots; // [component][step]
    std::vector<StepMetrics> per_step;
    double dt = 0.0;
};

StepMetrics combine(std::initializer_list<StepMetrics> parts) {
    StepMetrics total;
    for (const auto &m : parts) {
        total.n_function_evals += m.n_function_evals;
        total.n_iterations += m.n_iterations;
        total.cost += m.cost;
        total.trace_error_vs_oracle =
            std::max(total.trace_error_vs_oracle, m.trace_error_vs_oracle);
        total.converged = total.converged && m.converged;
    }
    return total;
}

StepMetrics from_ns_stats(const NSStepMetrics &m) {
    StepMetrics u{m.u.n_function_evals, m.u.n_iterations, m.u.cost,
                  m.u.trace_error_vs_oracle, m.u.converged};
    StepMetrics v{m.v.n_function_evals, m.v.n_iterations, m.v.cost,
                  m.v.trace_error_vs_oracle, m.v.converged};
    StepMetrics p{m.p.n_function_evals, m.p.n_iterations, m.p.cost,
                  m.p.trace_error_vs_oracle, m.p.converged};
    return combine({u, v, p});
}

std::vector<StepMetrics> zero_metrics(int n_t) {
    return std::vector<StepMetrics>(static_cast<std::size_t>(n_t));
}

void warn_shallow_ansatz(int layers, int n_qubits) {
    const double l_min = AnsatzParams::min_layers(n_qubits);
    if (double(layers) < l_min) {
        std::cerr << "warning: layers=" << layers << " is below 2^n/n = "
                  << csv_double(l_min) << " for n=" << n_qubits
                  << "; convergence may be limited\n";
    }
}

Eigen::VectorXd heat1d_initial(const ExperimentConfig &cfg,
                               const GridSpec &grid) {
    Eigen::VectorXd u0 = Eigen::VectorXd::Zero(grid.points());
    if (cfg.initial == "sin") {
        for (Eigen::Index i = 0; i < grid.points(); ++i) {
            u0(i) = std::sin(std::numbers::pi * grid.x_of(i));
        }
    }
    return u0;
}

EvolveOptions evolve_options(const ExperimentConfig &cfg,
                             std::uint64_t seed) {
    EvolveOptions opts;
    opts.layers = cfg.layers;
    opts.tol = cfg.tol;
    opts.max_evals = cfg.max_evals;
    opts.seed = seed;
    opts.warm_start = cfg.warm_start;
    return opts;
}

ExperimentOutput run_heat1d(const ExperimentConfig &cfg, std::uint64_t seed,
                            bool oracle_only) {
    const GridSpec grid = GridSpec::heat_1d(cfg.n, cfg.delta, cfg.n_t, cfg.dt);
    const BoundarySpec bc = BoundarySpec::dirichlet(cfg.g_left, cfg.g_right);
    const Eigen::VectorXd u0 = heat1d_initial(cfg, grid);

    ExperimentOutput out;
    out.components = {"u"};
    out.dt = grid.dt;
    if (oracle_only) {
        out.snapshots = {classical_evolve(cfg.scheme, grid, bc, u0).snapshots};
        out.per_step = zero_metrics(grid.n_t);
        return out;
    }
    warn_shallow_ansatz(cfg.layers, grid.n_qubits());
    TimeSeries series =
        evolve(grid, bc, u0, cfg.scheme, evolve_options(cfg, seed));
    out.snapshots = {std::move(series.snapshots)};
    out.per_step = std::move(series.per_step);
    return out;
}

ExperimentOutput run_heat2d(const ExperimentConfig &cfg, std::uint64_t seed,
                            bool oracle_only) {
    const GridSpec grid = GridSpec::heat_2d(cfg.mx, cfg.my, cfg.delta_x,
                                            cfg.delta_y, cfg.n_t, cfg.dt);
    const BoundarySpec2D bc = BoundarySpec2D::dirichlet(
        cfg.g_x_low, cfg.g_x_high, cfg.g_y_low, cfg.g_y_high);
    const Eigen::VectorXd u0 = Eigen::VectorXd::Zero(grid.points());

    ExperimentOutput out;
    out.components = {"u"};
    out.dt = grid.dt;
    if (oracle_only) {
        out.snapshots = {classical_evolve_2d(grid, bc, u0).snapshots};
        out.per_step = zero_metrics(grid.n_t);
        return out;
    }
    warn_shallow_ansatz(cfg.layers, grid.n_qubits());
    TimeSeries series = evolve_2d(grid, bc, u0, evolve_options(cfg, seed));
    out.snapshots = {std::move(series.snapshots)};
    out.per_step = std::move(series.per_step);
    return out;
}

ExperimentOutput run_reaction_diffusion(const ExperimentConfig &cfg,
                                        std::uint64_t seed,
                                        bool oracle_only) {
    const bool gray_scott = cfg.experiment == ExperimentKind::GrayScott;
    const GridSpec grid = GridSpec::heat_1d(cfg.n, 0.0, cfg.n_t, cfg.dt);

    RDSystem system;
    system.diffusivity = Eigen::Vector2d(cfg.d1, cfg.d2);
    const double k1 = cfg.k1;
    const double k2 = cfg.k2;
    ComponentPair u0;
    if (gray_scott) {
        system.source = [k1, k2](const Eigen::VectorXd &a,
                                 const Eigen::VectorXd &b) {
            return gray_scott_source(a, b, k1, k2);
        };
        system.bc1 = BoundarySpec::dirichlet(1.0, 1.0);
        system.bc2 = BoundarySpec::dirichlet(0.0, 0.0);
        u0 = gray_scott_initial(grid);
    } else {
        system.source = [k1, k2](const Eigen::VectorXd &a,
                                 const Eigen::VectorXd &b) {
            return brusselator_source(a, b, k1, k2);
        };
        system.bc1 = BoundarySpec::neumann();
        system.bc2 = BoundarySpec::neumann();
        u0.first = Eigen::VectorXd::Constant(grid.points(), 0.5);
        u0.second.resize(grid.points());
        for (Eigen::Index i = 0; i < grid.points(); ++i) {
            u0.second(i) = 1.0 + 5.0 * grid.x_of(i);
        }
    }

    ExperimentOutput out;
    out.components = {"u1", "u2"};
    out.dt = grid.dt;
    if (oracle_only) {
        RDOracleRun oracle = evolve_rd_oracle(system, grid, u0);
        out.snapshots = {std::move(oracle.u1), std::move(oracle.u2)};
        out.per_step = zero_metrics(grid.n_t);
        return out;
    }
    warn_shallow_ansatz(cfg.layers, grid.n_qubits());
    auto [series1, series2] =
        evolve_rd(system, grid, u0, evolve_options(cfg, seed));
    out.per_step.reserve(series1.per_step.size());
    for (std::size_t k = 0; k < series1.per_step.size(); ++k) {
        out.per_step.push_back(
            combine({series1.per_step[k], series2.per_step[k]}));
    }
    out.snapshots = {std::move(series1.snapshots),
                     std::move(series2.snapshots)};
    return out;
}

ExperimentOutput run_cavity(const ExperimentConfig &cfg, std::uint64_t seed,
                            bool oracle_only) {
    const GridSpec grid =
        GridSpec::heat_2d(cfg.mx, cfg.my, 0.0, 0.0, cfg.n_t, cfg.dt);
    const FlowState initial = FlowState::rest(grid, cfg.reynolds);

    ExperimentOutput out;
    out.components = {"u", "v", "p"};
    out.dt = grid.dt;
    if (oracle_only) {
        out.snapshots.assign(3, {});
        FlowState state = initial;
        auto push = [&out](const FlowState &s) {
            out.snapshots[0].push_back(s.u);
            out.snapshots[1].push_back(s.v);
            out.snapshots[2].push_back(s.p);
        };
        push(state);
        for (int k = 0; k < cfg.n_t; ++k) {
            state = classical_projection_step(state, cfg.lid_velocity);
            push(state);
        }
        out.per_step = zero_metrics(cfg.n_t);
        return out;
    }
    warn_shallow_ansatz(cfg.layers, grid.n_qubits());
    NSRun run = evolve_ns(initial, cfg.lid_velocity, cfg.n_t,
                          evolve_options(cfg, seed));
    out.snapshots.assign(3, {});
    for (const auto &s : run.states) {
        out.snapshots[0].push_back(s.u);
        out.snapshots[1].push_back(s.v);
        out.snapshots[2].push_back(s.p);
    }
    for (const auto &m : run.per_step) {
        out.per_step.push_back(from_ns_stats(m));
    }
    return out;
}

ExperimentOutput dispatch(const ExperimentConfig &cfg, std::uint64_t seed,
                          bool oracle_only) {
    switch (cfg.experiment) {
    case ExperimentKind::Heat1D:
        return run_heat1d(cfg, seed, oracle_only);
    case ExperimentKind::Heat2D:
        return run_heat2d(cfg, seed, oracle_only);
    case ExperimentKind::GrayScott:
    case ExperimentKind::Brusselator:
        return run_reaction_diffusion(cfg, seed, oracle_only);
    case ExperimentKind::Cavity:
        return run_cavity(cfg, seed, oracle_only);
    case ExperimentKind::Sweep:
        break;
    }
    throw ConfigError("sweep configs must be run through the sweep command");
}

fs::path prepare_output_dir(const ExperimentConfig &cfg,
                            const RunOptions &options) {
    fs::path dir = options.output_dir.empty()
                       ? (cfg.output.empty() ? fs::path(".")
                                             : fs::path(cfg.output))
                       : fs::path(options.output_dir);
    fs::create_directories(dir);
    return dir;
}

void write_solutions_csv(const fs::path &path, const ExperimentOutput &out) {
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot write " + path.string());
    }
    const bool multi = out.components.size() > 1;
    file << "step,time,grid_index,value";
    if (multi) {
        file << ",component";
    }
    file << "\n";
    const std::size_t n_steps = out.snapshots.front().size();
    for (std::size_t k = 0; k < n_steps; ++k) {
        const std::string time = csv_double(double(k) * out.dt);
        for (std::size_t c = 0; c < out.components.size(); ++c) {
            const Eigen::VectorXd &snap = out.snapshots[c][k];
            for (Eigen::Index i = 0; i < snap.size(); ++i) {
                file << k << ',' << time << ',' << i << ','
                     << csv_double(snap(i));
                if (multi) {
                    file << ',' << out.components[c];
                }
                file << "\n";
            }
        }
    }
}

void write_metrics_csv(const fs::path &path, const ExperimentOutput &out) {
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot write " + path.string());
    }
    file << "step,cost,n_function_evals,n_iterations,trace_error_vs_oracle\n";
    for (std::size_t k = 0; k < out.per_step.size(); ++k) {
        const StepMetrics &m = out.per_step[k];
        file << (k + 1) << ',' << csv_double(m.cost) << ','
             << m.n_function_evals << ',' << m.n_iterations << ','
             << csv_double(m.trace_error_vs_oracle) << "\n";
    }
}

std::string summary_line(const ExperimentConfig &cfg,
                         const ExperimentOutput &out, bool oracle_only) {
    double trace_sum = 0.0;
    double eval_sum = 0.0;
    int converged = 0;
    for (const auto &m : out.per_step) {
        trace_sum += m.trace_error_vs_oracle;
        eval_sum += double(m.n_function_evals);
        converged += m.converged ? 1 : 0;
    }
    const double steps = std::max<std::size_t>(out.per_step.size(), 1);
    std::string line = "summary experiment=" +
                       experiment_name(cfg.experiment) +
                       " mean_trace_error=" + csv_double(trace_sum / steps) +
                       " mean_function_evals=" + csv_double(eval_sum / steps) +
                       " steps=" + std::to_string(out.per_step.size()) +
                       " converged_steps=" + std::to_string(converged);
    if (oracle_only) {
        line += " mode=oracle";
    }
    return line;
}

struct RunningStats {
    double sum = 0.0;
    double sum_sq = 0.0;
    int count = 0;
    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++count;
    }
    double mean() const { return count ? sum / count : 0.0; }
    double stddev() const {
        if (count < 2) {
            return 0.0;
        }
        const double var =
            (sum_sq - sum * sum / count) / double(count - 1);
        return std::sqrt(std::max(0.0, var));
    }
};

} // namespace

int run_experiment(const ExperimentConfig &config, const RunOptions &options) {
    const std::uint64_t seed = options.seed_override.value_or(config.seed);
    const ExperimentOutput out =
        dispatch(config, seed, options.oracle_only);
    const fs::path dir = prepare_output_dir(config, options);
    write_solutions_csv(dir / "solutions.csv", out);
    write_metrics_csv(dir / "metrics.csv", out);

    for (std::size_t k = 0; k < out.per_step.size(); ++k) {
        if (!out.per_step[k].converged) {
            std::cerr << "warning: step " << (k + 1)
                      << " solve did not converge within the budget\n";
        }
    }
    const std::string line = summary_line(config, out, options.oracle_only);
    std::ofstream summary(dir / "summary.txt");
    summary << line << "\n";
    std::cout << line << "\n";
    return 0;
}

int run_sweep(const ExperimentConfig &config, const RunOptions &options) {
    if (config.experiment != ExperimentKind::Sweep) {
        throw ConfigError("run_sweep requires a sweep config");
    }
    const std::uint64_t base_seed =
        options.seed_override.value_or(config.seed);
    const fs::path dir = prepare_output_dir(config, options);

    std::ofstream file(dir / "sweep_stats.csv");
    if (!file) {
        throw std::runtime_error("cannot write sweep_stats.csv");
    }
    file << "config_id,n,layers,nl,delta,runs,mean_trace_error,"
            "std_trace_error,mean_T_eval,std_T_eval,"
            "mean_iterations_per_step,std_iterations_per_step\n";

    std::vector<std::pair<double, double>> slope_points; // (log nl, log T)
    int config_id = 0;
    for (const int n : config.n_list) {
        for (const int layers : config.layers_list) {
            for (const double delta : config.delta_list) {
                ExperimentConfig point = config;
                point.experiment = ExperimentKind::Heat1D;
                point.n = n;
                point.layers = layers;
                point.delta = delta;
                if (config.t_final > 0.0) {
                    // Fixed physical horizon: the diffusion parameter enters
                    // through the step size.
                    point.dt = config.dt * (delta / config.delta);
                    point.n_t = std::max(
                        1, int(std::llround(config.t_final / point.dt)));
                }
                warn_shallow_ansatz(layers, n);

                RunningStats trace, evals, iters;
                for (int r = 0; r < config.runs; ++r) {
                    const ExperimentOutput out = dispatch(
                        point, base_seed + std::uint64_t(r), false);
                    double t_sum = 0.0, e_sum = 0.0, i_sum = 0.0;
                    for (const auto &m : out.per_step) {
                        t_sum += m.trace_error_vs_oracle;
                        e_sum += double(m.n_function_evals);
                        i_sum += double(m.n_iterations);
                    }
                    const double steps = double(out.per_step.size());
                    trace.add(t_sum / steps);
                    evals.add(e_sum / steps);
                    iters.add(i_sum / steps);
                }
                file << config_id << ',' << n << ',' << layers << ','
                     << (n * layers) << ',' << csv_double(delta) << ','
                     << config.runs << ',' << csv_double(trace.mean()) << ','
                     << csv_double(trace.stddev()) << ','
                     << csv_double(evals.mean()) << ','
                     << csv_double(evals.stddev()) << ','
                     << csv_double(iters.mean()) << ','
                     << csv_double(iters.stddev()) << "\n";
                slope_points.emplace_back(std::log(double(n * layers)),
                                          std::log(evals.mean()));
                ++config_id;
            }
        }
    }

    std::string line = "summary experiment=sweep configs=" +
                       std::to_string(config_id) +
                       " runs_each=" + std::to_string(config.runs);
    // Log-log slope of T_eval vs parameter count, when it varies.
    double x_min = slope_points.front().first;
    double x_max = slope_points.front().first;
    for (const auto &p : slope_points) {
        x_min = std::min(x_min, p.first);
        x_max = std::max(x_max, p.first);
    }
    if (x_max > x_min) {
        double mx = 0.0, my_ = 0.0;
        for (const auto &p : slope_points) {
            mx += p.first;
            my_ += p.second;
        }
        mx /= double(slope_points.size());
        my_ /= double(slope_points.size());
        double num = 0.0, den = 0.0;
        for (const auto &p : slope_points) {
            num += (p.first - mx) * (p.second - my_);
            den += (p.first - mx) * (p.first - mx);
        }
        line += " nl_scaling_slope=" + csv_double(num / den);
    }
    std::ofstream summary(dir / "summary.txt");
    summary << line << "\n";
    std::cout << line << "\n";
    return 0;
}

} // namespace vqpde
