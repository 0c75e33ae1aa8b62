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
#include "vqpde/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace vqpde {

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

using KeyValues = std::map<std::string, std::string>;

KeyValues tokenize(const std::string &text) {
    KeyValues kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("line " + std::to_string(line_no) +
                              ": empty key or value");
        }
        if (kv.count(key)) {
            throw ConfigError("duplicate key '" + key + "'");
        }
        kv[key] = value;
    }
    return kv;
}

double parse_double(const std::string &key, const std::string &value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception &) {
        throw ConfigError("key '" + key + "': cannot parse number '" + value +
                          "'");
    }
    if (pos != value.size()) {
        throw ConfigError("key '" + key + "': trailing characters in '" +
                          value + "'");
    }
    return v;
}

long parse_int(const std::string &key, const std::string &value) {
    const double v = parse_double(key, value);
    const long iv = static_cast<long>(v);
    if (double(iv) != v) {
        throw ConfigError("key '" + key + "': expected an integer, got '" +
                          value + "'");
    }
    return iv;
}

bool parse_bool(const std::string &key, const std::string &value) {
    const std::string v = lower(value);
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    throw ConfigError("key '" + key + "': expected a boolean, got '" + value +
                      "'");
}

std::vector<std::string> split_list(const std::string &value) {
    std::vector<std::string> parts;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

Scheme parse_scheme(const std::string &value) {
    const std::string v = lower(value);
    if (v == "ie") {
        return Scheme::IE;
    }
    if (v == "cn") {
        return Scheme::CN;
    }
    throw ConfigError("scheme must be IE or CN, got '" + value + "'");
}

struct Reader {
    const KeyValues &kv;
    std::set<std::string> consumed;

    bool has(const std::string &key) {
        return kv.find(key) != kv.end();
    }
    std::string take(const std::string &key) {
        consumed.insert(key);
        return kv.at(key);
    }
    void read_int(const std::string &key, int &out, long min_value = 1) {
        if (has(key)) {
            const long v = parse_int(key, take(key));
            if (v < min_value) {
                throw ConfigError("key '" + key + "' must be >= " +
                                  std::to_string(min_value));
            }
            out = static_cast<int>(v);
        }
    }
    void read_double(const std::string &key, double &out,
                     bool require_positive = false,
                     bool require_nonnegative = false) {
        if (has(key)) {
            const double v = parse_double(key, take(key));
            if (require_positive && v <= 0.0) {
                throw ConfigError("key '" + key + "' must be positive");
            }
            if (require_nonnegative && v < 0.0) {
                throw ConfigError("key '" + key + "' must be nonnegative");
            }
            out = v;
        }
    }
    void read_bool(const std::string &key, bool &out) {
        if (has(key)) {
            out = parse_bool(key, take(key));
        }
    }
    void read_string(const std::string &key, std::string &out) {
        if (has(key)) {
            out = take(key);
        }
    }
    void reject_unknown() const {
        for (const auto &[key, value] : kv) {
            if (!consumed.count(key)) {
                throw ConfigError("unknown key '" + key + "'");
            }
        }
    }
};

void read_common(Reader &r, ExperimentConfig &cfg) {
    r.read_int("layers", cfg.layers);
    r.read_double("tol", cfg.tol, /*require_positive=*/true);
    r.read_int("max_evals", cfg.max_evals);
    r.read_bool("warm_start", cfg.warm_start);
    if (r.has("seed")) {
        const long v = parse_int("seed", r.take("seed"));
        if (v < 0) {
            throw ConfigError("seed must be nonnegative");
        }
        cfg.seed = static_cast<std::uint64_t>(v);
    }
    r.read_string("output", cfg.output);
}

void read_time(Reader &r, ExperimentConfig &cfg) {
    r.read_int("n_t", cfg.n_t);
    r.read_double("dt", cfg.dt, /*require_positive=*/true);
}

void read_heat1d_fields(Reader &r, ExperimentConfig &cfg) {
    if (r.has("scheme")) {
        cfg.scheme = parse_scheme(r.take("scheme"));
    }
    r.read_double("delta", cfg.delta, false, /*require_nonnegative=*/true);
    read_time(r, cfg);
    r.read_double("g_left", cfg.g_left);
    r.read_double("g_right", cfg.g_right);
    r.read_string("initial", cfg.initial);
    if (cfg.initial != "zero" && cfg.initial != "sin") {
        throw ConfigError("initial must be 'zero' or 'sin'");
    }
}

} // namespace

std::string experiment_name(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::Heat1D:
        return "heat1d";
    case ExperimentKind::Heat2D:
        return "heat2d";
    case ExperimentKind::GrayScott:
        return "grayscott";
    case ExperimentKind::Brusselator:
        return "brusselator";
    case ExperimentKind::Cavity:
        return "cavity";
    case ExperimentKind::Sweep:
        return "sweep";
    }
    return "unknown";
}

ExperimentConfig parse_config_text(const std::string &text) {
    const KeyValues kv = tokenize(text);
    Reader r{kv, {}};
    if (!r.has("experiment")) {
        throw ConfigError("missing required key 'experiment'");
    }
    const std::string name = lower(r.take("experiment"));

    ExperimentConfig cfg;
    if (name == "heat1d") {
        cfg.experiment = ExperimentKind::Heat1D;
        read_common(r, cfg);
        r.read_int("n", cfg.n);
        read_heat1d_fields(r, cfg);
    } else if (name == "heat2d") {
        cfg.experiment = ExperimentKind::Heat2D;
        cfg.layers = 6;
        read_common(r, cfg);
        r.read_int("mx", cfg.mx);
        r.read_int("my", cfg.my);
        r.read_double("delta_x", cfg.delta_x, false, true);
        r.read_double("delta_y", cfg.delta_y, false, true);
        read_time(r, cfg);
        r.read_double("g_x_low", cfg.g_x_low);
        r.read_double("g_x_high", cfg.g_x_high);
        r.read_double("g_y_low", cfg.g_y_low);
        r.read_double("g_y_high", cfg.g_y_high);
    } else if (name == "grayscott" || name == "brusselator") {
        const bool gs = name == "grayscott";
        cfg.experiment =
            gs ? ExperimentKind::GrayScott : ExperimentKind::Brusselator;
        cfg.n = gs ? 6 : 4;
        cfg.layers = gs ? 8 : 6;
        // The Brusselator reaction is too stiff for the explicit source at
        // dt = 0.5; 0.1 keeps the semi-implicit scheme stable.
        cfg.dt = gs ? 0.5 : 0.1;
        cfg.n_t = gs ? 1200 : 4000;
        if (!gs) {
            cfg.d1 = 1e-4;
            cfg.d2 = 1e-4;
            cfg.k1 = 3.0;
            cfg.k2 = 1.0;
        }
        read_common(r, cfg);
        r.read_int("n", cfg.n);
        r.read_double("d1", cfg.d1, false, true);
        r.read_double("d2", cfg.d2, false, true);
        r.read_double("k1", cfg.k1);
        r.read_double("k2", cfg.k2);
        read_time(r, cfg);
    } else if (name == "cavity") {
        cfg.experiment = ExperimentKind::Cavity;
        cfg.layers = 12;
        cfg.dt = 0.5;
        cfg.n_t = 10;
        read_common(r, cfg);
        r.read_int("mx", cfg.mx);
        r.read_int("my", cfg.my);
        r.read_double("reynolds", cfg.reynolds, /*require_positive=*/true);
        r.read_double("lid_velocity", cfg.lid_velocity);
        read_time(r, cfg);
    } else if (name == "sweep") {
        cfg.experiment = ExperimentKind::Sweep;
        read_common(r, cfg);
        r.read_string("target", cfg.target);
        if (lower(cfg.target) != "heat1d") {
            throw ConfigError("sweep target must be heat1d");
        }
        read_heat1d_fields(r, cfg);
        cfg.n_list = {cfg.n};
        cfg.layers_list = {cfg.layers};
        cfg.delta_list = {cfg.delta};
        if (r.has("n")) {
            cfg.n_list.clear();
            for (const auto &item : split_list(r.take("n"))) {
                cfg.n_list.push_back(static_cast<int>(parse_int("n", item)));
            }
        }
        if (r.has("layers_list")) {
            cfg.layers_list.clear();
            for (const auto &item : split_list(r.take("layers_list"))) {
                cfg.layers_list.push_back(
                    static_cast<int>(parse_int("layers_list", item)));
            }
        }
        if (r.has("delta_list")) {
            cfg.delta_list.clear();
            for (const auto &item : split_list(r.take("delta_list"))) {
                cfg.delta_list.push_back(parse_double("delta_list", item));
            }
        }
        r.read_int("runs", cfg.runs);
        r.read_double("t_final", cfg.t_final, /*require_positive=*/true);
        if (cfg.n_list.empty() || cfg.layers_list.empty() ||
            cfg.delta_list.empty()) {
            throw ConfigError("sweep lists must not be empty");
        }
    } else {
        throw ConfigError("unknown experiment '" + name + "'");
    }
    r.reject_unknown();
    return cfg;
}

ExperimentConfig parse_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

} // namespace vqpde
