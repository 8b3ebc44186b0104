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
 * Experiment pipelines: gradient-variance scans over qubit counts, decay-rate
 * fitting, multi-strategy training comparisons and 2-D cost landscapes.
 *
 * Seeding. For circuit i at qubit count q the gate axes are drawn from
 *   derive_seed(master, {CircuitStructure, q, i})
 * and the parameters for strategy t from
 *   derive_seed(master, {Parameters, q, i, t})
 * with t the strategy's enum value. Every strategy therefore sees the same
 * circuit structures, and results do not depend on the thread count.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "gradients.hpp"
#include "initializers.hpp"
#include "optimizers.hpp"
#include "parallel.hpp"
#include "random.hpp"

namespace bpinit {

// ---------------------------------------------------------------------------
// Variance scan
// ---------------------------------------------------------------------------

struct VarianceScanConfig {
    std::vector<std::size_t> qubit_counts{2, 4, 6, 8, 10};
    std::size_t n_circuits{200};
    std::size_t depth{100};
    std::vector<InitStrategy> strategies{kAllStrategies.begin(),
                                         kAllStrategies.end()};
    std::uint64_t master_seed{0};
    AxisPool axes{all_axes()};
    std::size_t parallelism{0}; // 0 = auto; never changes results

    void validate() const {
        if (qubit_counts.empty()) {
            throw ArgumentError("variance scan: no qubit counts given");
        }
        for (std::size_t k = 0; k < qubit_counts.size(); ++k) {
            if (qubit_counts[k] == 0 || qubit_counts[k] > kMaxQubits) {
                throw ArgumentError("variance scan: qubit count " +
                                    std::to_string(qubit_counts[k]) +
                                    " outside [1, " +
                                    std::to_string(kMaxQubits) + "]");
            }
            if (k > 0 && qubit_counts[k] <= qubit_counts[k - 1]) {
                throw ArgumentError(
                    "variance scan: qubit counts must be strictly increasing");
            }
        }
        if (n_circuits < 2) {
            throw ArgumentError("variance scan: need at least 2 circuits");
        }
        if (depth == 0) {
            throw ArgumentError("variance scan: depth must be >= 1");
        }
        if (axes.empty()) {
            throw ArgumentError("variance scan: empty axis pool");
        }
        for (std::size_t a = 0; a < strategies.size(); ++a) {
            for (std::size_t b = a + 1; b < strategies.size(); ++b) {
                if (strategies[a] == strategies[b]) {
                    throw ArgumentError("variance scan: duplicate strategy");
                }
            }
        }
    }
};

struct VarianceEntry {
    std::vector<double> gradients; // indexed by circuit i
    double variance{0.0};
};

using ScanKey = std::pair<std::size_t, InitStrategy>; // (qubits, strategy)

struct VarianceScanResult {
    VarianceScanConfig config;
    std::map<ScanKey, VarianceEntry> entries;

    [[nodiscard]] const VarianceEntry &at(std::size_t qubits,
                                          InitStrategy s) const {
        const auto it = entries.find({qubits, s});
        if (it == entries.end()) {
            throw ArgumentError("no scan entry for q=" + std::to_string(qubits) +
                                ", strategy " + std::string(strategy_name(s)));
        }
        return it->second;
    }
};

/// Divide-by-N variance, accumulated in index order.
[[nodiscard]] inline double population_variance(std::span<const double> xs) {
    if (xs.empty()) {
        return 0.0;
    }
    double mean = 0.0;
    for (const double x : xs) {
        mean += x;
    }
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (const double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return ss / static_cast<double>(xs.size());
}

[[nodiscard]] inline CircuitSpec scan_circuit(const VarianceScanConfig &config,
                                              std::size_t qubits,
                                              std::size_t index) {
    Rng rng(derive_seed(config.master_seed,
                        {stream_word(SeedStream::CircuitStructure), qubits, index}));
    return sample_variance_ansatz(qubits, config.depth, rng, config.axes);
}

[[nodiscard]] inline ParameterVector
scan_params(const VarianceScanConfig &config, const CircuitSpec &circuit,
            std::size_t index, InitStrategy strategy) {
    Rng rng(derive_seed(config.master_seed,
                        {stream_word(SeedStream::Parameters), circuit.n_qubits(),
                         index, static_cast<std::uint64_t>(strategy)}));
    return init_params(strategy, circuit.n_layers(), circuit.params_per_layer(),
                       rng);
}

/// Last-parameter gradients of n_circuits random ansaetze per (q, strategy).
[[nodiscard]] inline VarianceScanResult
variance_scan(const VarianceScanConfig &config) {
    config.validate();
    const std::size_t n_q = config.qubit_counts.size();
    const std::size_t n_c = config.n_circuits;
    const std::size_t n_s = config.strategies.size();

    // grads[(qi * n_s + s) * n_c + i]
    std::vector<double> grads(n_q * n_s * n_c, 0.0);
    parallel_for(n_q * n_c, config.parallelism, [&](std::size_t item) {
        const std::size_t qi = item / n_c;
        const std::size_t i = item % n_c;
        const CircuitSpec circuit = scan_circuit(config, config.qubit_counts[qi], i);
        for (std::size_t s = 0; s < n_s; ++s) {
            const ParameterVector params =
                scan_params(config, circuit, i, config.strategies[s]);
            grads[(qi * n_s + s) * n_c + i] = last_param_grad(circuit, params);
        }
    });

    VarianceScanResult result;
    result.config = config;
    for (std::size_t qi = 0; qi < n_q; ++qi) {
        for (std::size_t s = 0; s < n_s; ++s) {
            const auto first = grads.begin() + static_cast<std::ptrdiff_t>((qi * n_s + s) * n_c);
            VarianceEntry entry;
            entry.gradients.assign(first, first + static_cast<std::ptrdiff_t>(n_c));
            entry.variance = population_variance(entry.gradients);
            result.entries.emplace(ScanKey{config.qubit_counts[qi], config.strategies[s]},
                                   std::move(entry));
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Decay fit
// ---------------------------------------------------------------------------

struct LineFit {
    double slope{0.0};
    double intercept{0.0};
    double r_squared{0.0};
};

/// Ordinary least squares y = slope * x + intercept.
[[nodiscard]] inline LineFit fit_line(std::span<const double> xs,
                                      std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw ArgumentError("fit_line: need >= 2 points of equal length");
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxx += (xs[k] - mx) * (xs[k] - mx);
        sxy += (xs[k] - mx) * (ys[k] - my);
        syy += (ys[k] - my) * (ys[k] - my);
    }
    if (sxx == 0.0) {
        throw ArgumentError("fit_line: x values are all equal");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.r_squared = 1.0;
    } else {
        double ss_res = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const double r = ys[k] - (fit.slope * xs[k] + fit.intercept);
            ss_res += r * r;
        }
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

/// Reduction of the decay rate |slope| relative to the random baseline, in %.
[[nodiscard]] inline double improvement_pct(double slope_random, double slope) {
    return (std::abs(slope_random) - std::abs(slope)) / std::abs(slope_random) *
           100.0;
}

struct StrategyFit {
    LineFit line;
    double improvement_pct{std::numeric_limits<double>::quiet_NaN()};
};

/// Per strategy: ln(variance) against qubit count. improvement_pct is NaN
/// when the random strategy is not part of the scan.
struct DecayFit {
    std::map<InitStrategy, StrategyFit> strategies;

    [[nodiscard]] const StrategyFit &at(InitStrategy s) const {
        const auto it = strategies.find(s);
        if (it == strategies.end()) {
            throw ArgumentError("no fit for strategy " +
                                std::string(strategy_name(s)));
        }
        return it->second;
    }
};

[[nodiscard]] inline DecayFit fit_decay(const VarianceScanResult &result) {
    const auto &qs = result.config.qubit_counts;
    DecayFit out;
    if (result.config.strategies.empty()) {
        return out;
    }
    if (qs.size() < 2) {
        throw FitError("fit_decay: need at least 2 qubit counts");
    }
    for (const InitStrategy s : result.config.strategies) {
        std::vector<double> xs, ys;
        for (const std::size_t q : qs) {
            const double v = result.at(q, s).variance;
            if (!(v > 0.0)) {
                throw FitError("fit_decay: zero variance at q=" +
                               std::to_string(q) + ", strategy " +
                               std::string(strategy_name(s)));
            }
            xs.push_back(static_cast<double>(q));
            ys.push_back(std::log(v));
        }
        out.strategies[s].line = fit_line(xs, ys);
    }
    const auto random = out.strategies.find(InitStrategy::Random);
    if (random != out.strategies.end()) {
        const double base = random->second.line.slope;
        for (auto &[s, fit] : out.strategies) {
            fit.improvement_pct =
                s == InitStrategy::Random ? 0.0 : improvement_pct(base, fit.line.slope);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Training comparison
// ---------------------------------------------------------------------------

struct TrainingConfig {
    std::size_t n_qubits{10};
    std::size_t n_layers{5};
    std::vector<InitStrategy> strategies{kAllStrategies.begin(),
                                         kAllStrategies.end()};
    OptimizerConfig optimizer{};
    std::size_t max_iters{50};
    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
    std::size_t parallelism{0};
};

[[nodiscard]] inline ParameterVector training_params(const CircuitSpec &circuit,
                                                     InitStrategy strategy,
                                                     std::uint64_t seed) {
    Rng rng(derive_seed(seed, {stream_word(SeedStream::Training),
                               static_cast<std::uint64_t>(strategy)}));
    return init_params(strategy, circuit.n_layers(), circuit.params_per_layer(),
                       rng);
}

/// One trace per (strategy, seed), strategy-major, all on the same ansatz.
[[nodiscard]] inline std::vector<TrainTrace>
training_comparison(const TrainingConfig &config) {
    config.optimizer.validate();
    if (config.max_iters == 0) {
        throw ArgumentError("training: max_iters must be >= 1");
    }
    const CircuitSpec circuit =
        build_training_ansatz(config.n_qubits, config.n_layers);
    const std::size_t n_seeds = config.seeds.size();
    std::vector<TrainTrace> traces(config.strategies.size() * n_seeds);
    parallel_for(traces.size(), config.parallelism, [&](std::size_t item) {
        const InitStrategy strategy = config.strategies[item / n_seeds];
        const std::uint64_t seed = config.seeds[item % n_seeds];
        const ParameterVector init = training_params(circuit, strategy, seed);
        TrainTrace trace = train(circuit, init, config.optimizer, config.max_iters);
        trace.strategy_label = std::string(strategy_name(strategy));
        trace.seed = seed;
        traces[item] = std::move(trace);
    });
    return traces;
}

/**
 * First iteration k after which the loss stays within `tolerance` of the
 * final loss, i.e. |loss_j - loss_final| <= tolerance for every j >= k.
 */
[[nodiscard]] inline std::size_t
iterations_to_neighborhood(std::span<const double> losses, double tolerance) {
    if (losses.empty()) {
        throw ArgumentError("iterations_to_neighborhood: empty trace");
    }
    const double final_loss = losses.back();
    std::size_t k = losses.size() - 1;
    while (k > 0 && std::abs(losses[k - 1] - final_loss) <= tolerance) {
        --k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// Landscape
// ---------------------------------------------------------------------------

struct AngleRange {
    double lo{0.0};
    double hi{2.0 * std::numbers::pi};
    bool include_hi{true};
};

struct LandscapeGrid {
    std::size_t slot_a{0};
    std::size_t slot_b{1};
    std::vector<double> axis_a;
    std::vector<double> axis_b;
    std::vector<std::vector<double>> costs; // costs[i][j] at (axis_a[i], axis_b[j])
};

[[nodiscard]] inline std::vector<double> grid_axis(const AngleRange &range,
                                                   std::size_t points) {
    std::vector<double> axis(points);
    if (points == 1) {
        axis[0] = range.lo;
        return axis;
    }
    const double span = range.hi - range.lo;
    const double steps = static_cast<double>(range.include_hi ? points - 1 : points);
    for (std::size_t k = 0; k < points; ++k) {
        axis[k] = range.lo + span * static_cast<double>(k) / steps;
    }
    if (range.include_hi) {
        axis.back() = range.hi;
    }
    return axis;
}

[[nodiscard]] inline LandscapeGrid
landscape_scan(const CircuitSpec &circuit, std::span<const double> base_params,
               std::size_t slot_a, std::size_t slot_b, std::size_t grid_points,
               const AngleRange &range, std::size_t parallelism = 1) {
    check_params(circuit, base_params);
    if (slot_a == slot_b) {
        throw ArgumentError("landscape_scan: slots must differ");
    }
    if (slot_a >= circuit.n_params() || slot_b >= circuit.n_params()) {
        throw ArgumentError("landscape_scan: slot out of range");
    }
    if (grid_points == 0) {
        throw ArgumentError("landscape_scan: grid_points must be >= 1");
    }
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi)) {
        throw ArgumentError("landscape_scan: range must be finite");
    }
    LandscapeGrid grid;
    grid.slot_a = slot_a;
    grid.slot_b = slot_b;
    grid.axis_a = grid_axis(range, grid_points);
    grid.axis_b = grid.axis_a;
    grid.costs.assign(grid_points, std::vector<double>(grid_points, 0.0));
    parallel_for(grid_points, parallelism, [&](std::size_t i) {
        std::vector<double> params(base_params.begin(), base_params.end());
        params[slot_a] = grid.axis_a[i];
        for (std::size_t j = 0; j < grid_points; ++j) {
            params[slot_b] = grid.axis_b[j];
            grid.costs[i][j] = global_cost(circuit, params);
        }
    });
    return grid;
}

} // namespace bpinit
