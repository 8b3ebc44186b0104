// Copyright 2026 The bpinit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * CSV and JSON result writers.
 *
 * CSV schemas (one header line, comma separated, '\n' line endings):
 *
 *   variances.csv  qubits,strategy,variance,n_circuits,depth,seed
 *   gradients.csv  qubits,strategy,circuit_index,gradient
 *   decay_fit.csv  strategy,slope,intercept,r_squared,improvement_pct
 *   training.csv   strategy,optimizer,seed,iteration,loss
 *   landscape.csv  i,j,angle_a,angle_b,cost
 *
 * Reals are printed with 17 significant digits ("%.17g"), so every value
 * parses back to the identical double. Rows are sorted by qubit count, then
 * strategy name, then index.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "circuit.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "initializers.hpp"
#include "optimizers.hpp"

namespace bpinit {

inline constexpr const char *kVersion = "0.1.0";

[[nodiscard]] inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline void ensure_directory(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string() +
                      (ec ? ": " + ec.message() : std::string{}));
    }
}

inline void write_text_file(const std::filesystem::path &path,
                            const std::string &contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

/// Strategies of a scan sorted by name, the CSV row order.
[[nodiscard]] inline std::vector<InitStrategy>
strategies_by_name(std::vector<InitStrategy> strategies) {
    std::sort(strategies.begin(), strategies.end(),
              [](InitStrategy a, InitStrategy b) {
                  return strategy_name(a) < strategy_name(b);
              });
    return strategies;
}

// ---------------------------------------------------------------------------
// Variance scan
// ---------------------------------------------------------------------------

[[nodiscard]] inline std::string variances_csv(const VarianceScanResult &r) {
    std::ostringstream os;
    os << "qubits,strategy,variance,n_circuits,depth,seed\n";
    const auto names = strategies_by_name(r.config.strategies);
    for (const std::size_t q : r.config.qubit_counts) {
        for (const InitStrategy s : names) {
            os << q << ',' << strategy_name(s) << ','
               << format_real(r.at(q, s).variance) << ','
               << r.config.n_circuits << ',' << r.config.depth << ','
               << r.config.master_seed << '\n';
        }
    }
    return os.str();
}

[[nodiscard]] inline std::string gradients_csv(const VarianceScanResult &r) {
    std::ostringstream os;
    os << "qubits,strategy,circuit_index,gradient\n";
    const auto names = strategies_by_name(r.config.strategies);
    for (const std::size_t q : r.config.qubit_counts) {
        for (const InitStrategy s : names) {
            const auto &grads = r.at(q, s).gradients;
            for (std::size_t i = 0; i < grads.size(); ++i) {
                os << q << ',' << strategy_name(s) << ',' << i << ','
                   << format_real(grads[i]) << '\n';
            }
        }
    }
    return os.str();
}

[[nodiscard]] inline std::string decay_fit_csv(const DecayFit &fit) {
    std::ostringstream os;
    os << "strategy,slope,intercept,r_squared,improvement_pct\n";
    std::vector<InitStrategy> present;
    for (const auto &[s, f] : fit.strategies) {
        present.push_back(s);
    }
    for (const InitStrategy s : strategies_by_name(present)) {
        const StrategyFit &f = fit.at(s);
        os << strategy_name(s) << ',' << format_real(f.line.slope) << ','
           << format_real(f.line.intercept) << ','
           << format_real(f.line.r_squared) << ','
           << format_real(f.improvement_pct) << '\n';
    }
    return os.str();
}

/// Writes variances.csv, gradients.csv and decay_fit.csv into `dir`.
inline void write_variance_csv(const VarianceScanResult &result,
                               const DecayFit &fit,
                               const std::filesystem::path &dir) {
    ensure_directory(dir);
    write_text_file(dir / "variances.csv", variances_csv(result));
    write_text_file(dir / "gradients.csv", gradients_csv(result));
    write_text_file(dir / "decay_fit.csv", decay_fit_csv(fit));
}

// ---------------------------------------------------------------------------
// Training
// ---------------------------------------------------------------------------

[[nodiscard]] inline std::string training_csv(std::vector<TrainTrace> traces) {
    std::stable_sort(traces.begin(), traces.end(),
                     [](const TrainTrace &a, const TrainTrace &b) {
                         if (a.strategy_label != b.strategy_label) {
                             return a.strategy_label < b.strategy_label;
                         }
                         if (a.optimizer_label != b.optimizer_label) {
                             return a.optimizer_label < b.optimizer_label;
                         }
                         return a.seed < b.seed;
                     });
    std::ostringstream os;
    os << "strategy,optimizer,seed,iteration,loss\n";
    for (const TrainTrace &t : traces) {
        for (std::size_t k = 0; k < t.losses.size(); ++k) {
            os << t.strategy_label << ',' << t.optimizer_label << ',' << t.seed
               << ',' << k << ',' << format_real(t.losses[k]) << '\n';
        }
    }
    return os.str();
}

inline void write_train_csv(const std::vector<TrainTrace> &traces,
                            const std::filesystem::path &dir) {
    ensure_directory(dir);
    write_text_file(dir / "training.csv", training_csv(traces));
}

// ---------------------------------------------------------------------------
// Landscape
// ---------------------------------------------------------------------------

[[nodiscard]] inline std::string landscape_csv(const LandscapeGrid &grid) {
    std::ostringstream os;
    os << "i,j,angle_a,angle_b,cost\n";
    for (std::size_t i = 0; i < grid.axis_a.size(); ++i) {
        for (std::size_t j = 0; j < grid.axis_b.size(); ++j) {
            os << i << ',' << j << ',' << format_real(grid.axis_a[i]) << ','
               << format_real(grid.axis_b[j]) << ','
               << format_real(grid.costs[i][j]) << '\n';
        }
    }
    return os.str();
}

inline void write_landscape_csv(const LandscapeGrid &grid,
                                const std::filesystem::path &dir) {
    ensure_directory(dir);
    write_text_file(dir / "landscape.csv", landscape_csv(grid));
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

using Json = nlohmann::ordered_json;

// JSON has no NaN; a missing value is written as null.
[[nodiscard]] inline Json json_real(double x) {
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

[[nodiscard]] inline Json circuit_to_json(const CircuitSpec &circuit) {
    Json gates = Json::array();
    for (const GateSpec &g : circuit.gates()) {
        Json entry{{"kind", gate_kind_name(g.kind)}, {"target", g.target}};
        if (g.partner) {
            entry["partner"] = *g.partner;
        }
        if (g.param_slot) {
            entry["param_slot"] = *g.param_slot;
        }
        gates.push_back(std::move(entry));
    }
    return Json{{"n_qubits", circuit.n_qubits()},
                {"n_layers", circuit.n_layers()},
                {"params_per_layer", circuit.params_per_layer()},
                {"n_params", circuit.n_params()},
                {"gates", std::move(gates)}};
}

[[nodiscard]] inline Json scan_config_to_json(const VarianceScanConfig &c) {
    Json strategies = Json::array();
    for (const InitStrategy s : c.strategies) {
        strategies.push_back(strategy_name(s));
    }
    std::string axes;
    for (const Axis a : c.axes) {
        axes.push_back(axis_name(a));
    }
    return Json{{"qubit_counts", c.qubit_counts},
                {"n_circuits", c.n_circuits},
                {"depth", c.depth},
                {"strategies", std::move(strategies)},
                {"master_seed", c.master_seed},
                {"axes", axes},
                {"fan_mapping", "fan_in = fan_out = params_per_layer"}};
}

[[nodiscard]] inline Json variance_to_json(const VarianceScanResult &r,
                                           const DecayFit &fit) {
    Json entries = Json::array();
    for (const std::size_t q : r.config.qubit_counts) {
        for (const InitStrategy s : strategies_by_name(r.config.strategies)) {
            const VarianceEntry &e = r.at(q, s);
            entries.push_back(Json{{"qubits", q},
                                   {"strategy", strategy_name(s)},
                                   {"variance", e.variance},
                                   {"gradients", e.gradients}});
        }
    }
    Json fits = Json::array();
    for (const auto &[s, f] : fit.strategies) {
        fits.push_back(Json{{"strategy", strategy_name(s)},
                            {"slope", f.line.slope},
                            {"intercept", f.line.intercept},
                            {"r_squared", f.line.r_squared},
                            {"improvement_pct", json_real(f.improvement_pct)}});
    }
    return Json{{"config", scan_config_to_json(r.config)},
                {"entries", std::move(entries)},
                {"decay_fit", std::move(fits)}};
}

[[nodiscard]] inline Json training_to_json(const std::vector<TrainTrace> &traces) {
    Json out = Json::array();
    for (const TrainTrace &t : traces) {
        out.push_back(Json{{"strategy", t.strategy_label},
                           {"optimizer", t.optimizer_label},
                           {"seed", t.seed},
                           {"losses", t.losses},
                           {"final_params", t.final_params}});
    }
    return out;
}

[[nodiscard]] inline Json landscape_to_json(const LandscapeGrid &grid) {
    return Json{{"slot_a", grid.slot_a},
                {"slot_b", grid.slot_b},
                {"axis_a", grid.axis_a},
                {"axis_b", grid.axis_b},
                {"costs", grid.costs}};
}

inline void write_json_file(const std::filesystem::path &path, const Json &j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace bpinit
