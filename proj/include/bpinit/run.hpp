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
 * Resolved run configuration and the experiment dispatcher behind the CLI.
 *
 * Every run writes its result files plus `provenance.json` (resolved config,
 * seed, tool version) into the output directory.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "experiments.hpp"
#include "io.hpp"

namespace bpinit {

enum class Command { VarianceScan, Train, Landscape };

[[nodiscard]] constexpr const char *command_name(Command c) {
    switch (c) {
    case Command::VarianceScan:
        return "variance-scan";
    case Command::Train:
        return "train";
    case Command::Landscape:
        return "landscape";
    }
    return "?";
}

enum class OutputFormat { Csv, Json, Both };

[[nodiscard]] constexpr const char *format_name(OutputFormat f) {
    switch (f) {
    case OutputFormat::Csv:
        return "csv";
    case OutputFormat::Json:
        return "json";
    case OutputFormat::Both:
        return "both";
    }
    return "?";
}

struct LandscapeConfig {
    std::size_t n_qubits{2};
    std::size_t n_layers{100};
    std::size_t slot_a{0};
    std::size_t slot_b{1};
    std::size_t grid_points{41};
    AngleRange range{};
    InitStrategy base_strategy{InitStrategy::Random};
    std::uint64_t seed{0}; // base-parameter seed; run() sets it from master_seed
};

struct RunConfig {
    Command command{Command::VarianceScan};
    std::filesystem::path output_dir{"results"};
    OutputFormat output_format{OutputFormat::Csv};
    std::uint64_t master_seed{0};
    std::size_t parallelism{0}; // 0 = auto

    VarianceScanConfig variance{};
    TrainingConfig training{};
    LandscapeConfig landscape{};
};

[[nodiscard]] inline Json training_config_to_json(const TrainingConfig &c) {
    Json strategies = Json::array();
    for (const InitStrategy s : c.strategies) {
        strategies.push_back(strategy_name(s));
    }
    return Json{{"n_qubits", c.n_qubits},
                {"n_layers", c.n_layers},
                {"strategies", std::move(strategies)},
                {"optimizer", optimizer_name(c.optimizer.kind)},
                {"step_size", c.optimizer.step_size},
                {"adam_beta1", c.optimizer.beta1},
                {"adam_beta2", c.optimizer.beta2},
                {"adam_epsilon", c.optimizer.epsilon},
                {"max_iters", c.max_iters},
                {"seeds", c.seeds},
                {"fan_mapping", "fan_in = fan_out = params_per_layer"}};
}

[[nodiscard]] inline Json landscape_config_to_json(const LandscapeConfig &c) {
    return Json{{"n_qubits", c.n_qubits},
                {"n_layers", c.n_layers},
                {"slot_a", c.slot_a},
                {"slot_b", c.slot_b},
                {"grid_points", c.grid_points},
                {"range_min", c.range.lo},
                {"range_max", c.range.hi},
                {"range_includes_max", c.range.include_hi},
                {"base_strategy", strategy_name(c.base_strategy)},
                {"seed", c.seed}};
}

[[nodiscard]] inline Json provenance_json(const RunConfig &c) {
    Json experiment;
    switch (c.command) {
    case Command::VarianceScan:
        experiment = scan_config_to_json(c.variance);
        break;
    case Command::Train:
        experiment = training_config_to_json(c.training);
        break;
    case Command::Landscape:
        experiment = landscape_config_to_json(c.landscape);
        break;
    }
    return Json{{"tool", "bpinit"},
                {"version", kVersion},
                {"command", command_name(c.command)},
                {"master_seed", c.master_seed},
                {"output_format", format_name(c.output_format)},
                {"parallelism", c.parallelism == 0 ? Json("auto") : Json(c.parallelism)},
                {"experiment", std::move(experiment)}};
}

namespace detail {
inline bool wants_csv(OutputFormat f) { return f != OutputFormat::Json; }
inline bool wants_json(OutputFormat f) { return f != OutputFormat::Csv; }
} // namespace detail

/// Executes the configured experiment and writes all result files.
inline void run(RunConfig config) {
    ensure_directory(config.output_dir);
    const auto &dir = config.output_dir;
    switch (config.command) {
    case Command::VarianceScan: {
        config.variance.master_seed = config.master_seed;
        config.variance.parallelism = config.parallelism;
        const VarianceScanResult result = variance_scan(config.variance);
        const DecayFit fit = fit_decay(result);
        if (detail::wants_csv(config.output_format)) {
            write_variance_csv(result, fit, dir);
        }
        if (detail::wants_json(config.output_format)) {
            write_json_file(dir / "variance_scan.json", variance_to_json(result, fit));
        }
        break;
    }
    case Command::Train: {
        config.training.parallelism = config.parallelism;
        const auto traces = training_comparison(config.training);
        if (detail::wants_csv(config.output_format)) {
            write_train_csv(traces, dir);
        }
        if (detail::wants_json(config.output_format)) {
            write_json_file(dir / "training.json", training_to_json(traces));
        }
        break;
    }
    case Command::Landscape: {
        config.landscape.seed = config.master_seed;
        const LandscapeConfig &lc = config.landscape;
        const CircuitSpec circuit = build_training_ansatz(lc.n_qubits, lc.n_layers);
        Rng rng(derive_seed(lc.seed, {stream_word(SeedStream::Landscape),
                                      static_cast<std::uint64_t>(lc.base_strategy)}));
        const ParameterVector base = init_params(
            lc.base_strategy, circuit.n_layers(), circuit.params_per_layer(), rng);
        const LandscapeGrid grid = landscape_scan(
            circuit, base, lc.slot_a, lc.slot_b, lc.grid_points, lc.range,
            config.parallelism);
        if (detail::wants_csv(config.output_format)) {
            write_landscape_csv(grid, dir);
        }
        if (detail::wants_json(config.output_format)) {
            write_json_file(dir / "landscape.json", landscape_to_json(grid));
        }
        break;
    }
    }
    write_json_file(dir / "provenance.json", provenance_json(config));
}

} // namespace bpinit
