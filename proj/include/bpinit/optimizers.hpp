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
 * Gradient descent and Adam, plus the fixed-budget training loop.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "gradients.hpp"

namespace bpinit {

enum class OptimizerKind { GradientDescent, Adam };

[[nodiscard]] constexpr std::string_view optimizer_name(OptimizerKind kind) {
    return kind == OptimizerKind::Adam ? "adam" : "gd";
}

[[nodiscard]] inline std::optional<OptimizerKind>
parse_optimizer(std::string_view name) {
    if (name == "gd") {
        return OptimizerKind::GradientDescent;
    }
    if (name == "adam") {
        return OptimizerKind::Adam;
    }
    return std::nullopt;
}

struct OptimizerConfig {
    OptimizerKind kind{OptimizerKind::Adam};
    double step_size{0.1};
    double beta1{0.9};
    double beta2{0.999};
    double epsilon{1e-8};

    void validate() const {
        if (!(step_size >= 0.0) || !std::isfinite(step_size)) {
            throw ArgumentError("optimizer: step size must be finite and >= 0");
        }
        if (!(beta1 > 0.0 && beta1 < 1.0) || !(beta2 > 0.0 && beta2 < 1.0)) {
            throw ArgumentError("optimizer: Adam betas must lie in (0, 1)");
        }
        if (!(epsilon > 0.0)) {
            throw ArgumentError("optimizer: Adam epsilon must be > 0");
        }
    }
};

struct OptimizerState {
    OptimizerConfig config;
    std::vector<double> first_moment;
    std::vector<double> second_moment;
    std::uint64_t step_count{0};

    OptimizerState(OptimizerConfig cfg, std::size_t n_params)
        : config(cfg), first_moment(n_params, 0.0),
          second_moment(n_params, 0.0) {
        config.validate();
    }
};

namespace detail {
inline void check_lengths(std::size_t params, std::size_t grads) {
    if (params != grads) {
        throw ArgumentError("optimizer: " + std::to_string(params) +
                            " parameters but " + std::to_string(grads) +
                            " gradient entries");
    }
}
} // namespace detail

/// params - step_size * grads
[[nodiscard]] inline ParameterVector gd_step(std::span<const double> params,
                                             std::span<const double> grads,
                                             double step_size) {
    detail::check_lengths(params.size(), grads.size());
    ParameterVector out(params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
        out[k] = params[k] - step_size * grads[k];
    }
    return out;
}

/// One bias-corrected Adam update. Moments and step count live in `state`.
[[nodiscard]] inline ParameterVector adam_step(OptimizerState &state,
                                               std::span<const double> params,
                                               std::span<const double> grads) {
    if (state.config.kind != OptimizerKind::Adam) {
        throw ArgumentError("adam_step: optimizer state is not Adam");
    }
    detail::check_lengths(params.size(), grads.size());
    detail::check_lengths(state.first_moment.size(), grads.size());

    const OptimizerConfig &cfg = state.config;
    ++state.step_count;
    const double t = static_cast<double>(state.step_count);
    const double correction1 = 1.0 - std::pow(cfg.beta1, t);
    const double correction2 = 1.0 - std::pow(cfg.beta2, t);

    ParameterVector out(params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
        const double g = grads[k];
        double &m = state.first_moment[k];
        double &v = state.second_moment[k];
        m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
        v = cfg.beta2 * v + (1.0 - cfg.beta2) * g * g;
        const double m_hat = m / correction1;
        const double v_hat = v / correction2;
        out[k] = params[k] - cfg.step_size * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
    }
    return out;
}

/// Dispatches to gd_step or adam_step according to the state's config.
[[nodiscard]] inline ParameterVector
optimizer_step(OptimizerState &state, std::span<const double> params,
               std::span<const double> grads) {
    if (state.config.kind == OptimizerKind::Adam) {
        return adam_step(state, params, grads);
    }
    ++state.step_count;
    return gd_step(params, grads, state.config.step_size);
}

struct TrainTrace {
    std::vector<double> losses; // losses[0] is the loss at initialization
    ParameterVector final_params;
    std::string strategy_label;
    std::string optimizer_label;
    std::uint64_t seed{0};
};

/**
 * Runs exactly `max_iters` optimizer updates (no early stopping) and records
 * the global cost before the first update and after every update.
 */
[[nodiscard]] inline TrainTrace train(const CircuitSpec &circuit,
                                      std::span<const double> init_params,
                                      const OptimizerConfig &config,
                                      std::size_t max_iters) {
    check_params(circuit, init_params);
    if (max_iters == 0) {
        throw ArgumentError("train: max_iters must be >= 1");
    }
    OptimizerState state(config, circuit.n_params());
    ParameterVector params(init_params.begin(), init_params.end());

    TrainTrace trace;
    trace.optimizer_label = std::string(optimizer_name(config.kind));
    trace.losses.reserve(max_iters + 1);
    trace.losses.push_back(global_cost(circuit, params));
    for (std::size_t it = 0; it < max_iters; ++it) {
        const GradientVector grads = full_gradient(circuit, params);
        params = optimizer_step(state, params, grads);
        trace.losses.push_back(global_cost(circuit, params));
    }
    trace.final_params = std::move(params);
    return trace;
}

} // namespace bpinit
