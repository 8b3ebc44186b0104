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
//
// bpinit command-line tool.
//
//   bpinit variance-scan [--qubits 2,4,6,8,10] [--circuits 200] [--depth 100]
//   bpinit train         [--qubits 10] [--layers 5] [--optimizer adam] ...
//   bpinit landscape     [--qubits 2] [--layers 100] [--grid 41] ...
//
// Exit status: 0 success, 1 I/O or runtime failure, 2 usage error.
// BPINIT_OUTPUT_DIR overrides the default output directory; an explicit
// --output-dir wins over both.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpinit/run.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::vector<bpinit::InitStrategy> parse_strategies(const std::string &text) {
    if (text == "all") {
        return {bpinit::kAllStrategies.begin(), bpinit::kAllStrategies.end()};
    }
    std::vector<bpinit::InitStrategy> out;
    if (text.empty() || text == "none") {
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string name =
            text.substr(start, comma == std::string::npos ? std::string::npos
                                                           : comma - start);
        const auto s = bpinit::parse_strategy(name);
        if (!s) {
            throw UsageError("unknown strategy '" + name + "'");
        }
        out.push_back(*s);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

bpinit::AxisPool parse_axes(const std::string &text) {
    bpinit::AxisPool out;
    for (const char c : text) {
        switch (c) {
        case 'X':
        case 'x':
            out.push_back(bpinit::Axis::X);
            break;
        case 'Y':
        case 'y':
            out.push_back(bpinit::Axis::Y);
            break;
        case 'Z':
        case 'z':
            out.push_back(bpinit::Axis::Z);
            break;
        default:
            throw UsageError(std::string("unknown rotation axis '") + c + "'");
        }
    }
    if (out.empty()) {
        throw UsageError("--axes must name at least one of X, Y, Z");
    }
    return out;
}

std::size_t parse_parallelism(const std::string &text) {
    if (text == "auto") {
        return 0;
    }
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos == text.size() && v >= 1) {
            return static_cast<std::size_t>(v);
        }
    } catch (const std::exception &) {
    }
    throw UsageError("--threads must be 'auto' or a positive integer");
}

} // namespace

int main(int argc, char **argv) {
    using namespace bpinit;

    RunConfig config;
    if (const char *env = std::getenv("BPINIT_OUTPUT_DIR"); env && *env) {
        config.output_dir = env;
    }

    CLI::App app{"Barren-plateau initialization experiments on simulated "
                 "parameterized quantum circuits"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string output_dir = config.output_dir.string();
    std::string format = "csv";
    std::string threads = "auto";
    std::uint64_t seed = 0;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("-o,--output-dir", output_dir,
                        "Directory for result files (env BPINIT_OUTPUT_DIR)")
            ->capture_default_str();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "both"}))
            ->capture_default_str();
        sub->add_option("--seed", seed, "Master seed")->capture_default_str();
        sub->add_option("--threads", threads,
                        "Worker threads ('auto' or N); never changes results")
            ->capture_default_str();
    };

    // variance-scan
    auto *scan = app.add_subcommand("variance-scan",
                                    "Gradient-variance scan over qubit counts");
    add_common(scan);
    VarianceScanConfig &vc = config.variance;
    std::string scan_strategies = "all";
    std::string axes = "XYZ";
    scan->add_option("--qubits", vc.qubit_counts, "Qubit counts")
        ->delimiter(',')
        ->capture_default_str();
    scan->add_option("--circuits", vc.n_circuits, "Random circuits per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan->add_option("--depth", vc.depth, "Layers per random circuit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan->add_option("--strategies", scan_strategies,
                     "Comma-separated strategies, 'all' or 'none'")
        ->capture_default_str();
    scan->add_option("--axes", axes, "Rotation axes to draw from")
        ->capture_default_str();

    // train
    auto *train = app.add_subcommand(
        "train", "Train the layered RX/RY ansatz toward |0...0> per strategy");
    add_common(train);
    TrainingConfig &tc = config.training;
    std::string train_strategies = "all";
    std::string optimizer = "adam";
    std::size_t n_seeds = 5;
    std::vector<std::uint64_t> explicit_seeds;
    train->add_option("--qubits", tc.n_qubits, "Qubits")
        ->check(CLI::Range(std::size_t{1}, kMaxQubits))
        ->capture_default_str();
    train->add_option("--layers", tc.n_layers, "Layers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    train->add_option("--optimizer", optimizer, "Optimizer")
        ->check(CLI::IsMember({"gd", "adam"}))
        ->capture_default_str();
    train->add_option("--lr", tc.optimizer.step_size, "Step size")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    train->add_option("--beta1", tc.optimizer.beta1, "Adam beta1")
        ->capture_default_str();
    train->add_option("--beta2", tc.optimizer.beta2, "Adam beta2")
        ->capture_default_str();
    train->add_option("--epsilon", tc.optimizer.epsilon, "Adam epsilon")
        ->capture_default_str();
    train->add_option("--iters", tc.max_iters, "Optimizer iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    train->add_option("--strategies", train_strategies,
                      "Comma-separated strategies or 'all'")
        ->capture_default_str();
    train->add_option("--n-seeds", n_seeds,
                      "Number of seeds (seed, seed+1, ...)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    train->add_option("--seeds", explicit_seeds,
                      "Explicit comma-separated seed list (overrides --n-seeds)")
        ->delimiter(',');

    // landscape
    auto *land = app.add_subcommand(
        "landscape", "2-parameter cost landscape of the layered RX/RY ansatz");
    add_common(land);
    LandscapeConfig &lc = config.landscape;
    std::string base_strategy = "random";
    land->add_option("--qubits", lc.n_qubits, "Qubits")
        ->check(CLI::Range(std::size_t{1}, kMaxQubits))
        ->capture_default_str();
    land->add_option("--layers", lc.n_layers, "Layers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    land->add_option("--slot-a", lc.slot_a, "First scanned parameter slot")
        ->capture_default_str();
    land->add_option("--slot-b", lc.slot_b, "Second scanned parameter slot")
        ->capture_default_str();
    land->add_option("--grid", lc.grid_points, "Grid points per axis")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    land->add_option("--range-min", lc.range.lo, "Lower angle bound")
        ->capture_default_str();
    land->add_option("--range-max", lc.range.hi, "Upper angle bound")
        ->capture_default_str();
    bool half_open = false;
    land->add_flag("--half-open", half_open, "Exclude the upper bound");
    land->add_option("--base-strategy", base_strategy,
                     "Initialization of the fixed parameters")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        config.output_dir = output_dir;
        config.output_format = format == "json"   ? OutputFormat::Json
                               : format == "both" ? OutputFormat::Both
                                                  : OutputFormat::Csv;
        config.master_seed = seed;
        config.parallelism = parse_parallelism(threads);

        if (scan->parsed()) {
            config.command = Command::VarianceScan;
            vc.strategies = parse_strategies(scan_strategies);
            vc.axes = parse_axes(axes);
        } else if (train->parsed()) {
            config.command = Command::Train;
            tc.strategies = parse_strategies(train_strategies);
            tc.optimizer.kind = *parse_optimizer(optimizer);
            if (!explicit_seeds.empty()) {
                tc.seeds = explicit_seeds;
            } else {
                tc.seeds.clear();
                for (std::size_t k = 0; k < n_seeds; ++k) {
                    tc.seeds.push_back(seed + k);
                }
            }
        } else {
            config.command = Command::Landscape;
            lc.range.include_hi = !half_open;
            const auto s = parse_strategy(base_strategy);
            if (!s) {
                throw UsageError("unknown strategy '" + base_strategy + "'");
            }
            lc.base_strategy = *s;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        run(config);
    } catch (const ArgumentError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IndexError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    std::cout << "wrote results to " << config.output_dir.string() << "\n";
    return 0;
}
