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
 * Global cost C(theta) = 1 - |<0...0|U(theta)|0...0>|^2 and its gradients.
 *
 * Production gradients use the parameter-shift rule, exact for rotations
 * generated by Pauli/2:
 *   dC/dtheta_k = [C(theta + pi/2 e_k) - C(theta - pi/2 e_k)] / 2
 * The central finite difference is kept as a validation oracle.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "simulator.hpp"

namespace bpinit {

using GradientVector = std::vector<double>;

namespace detail {

inline double cost_of(const StateVector &state) {
    return std::clamp(1.0 - state.prob_all_zero(), 0.0, 1.0);
}

inline void check_slot(const CircuitSpec &circuit, std::size_t slot) {
    if (slot >= circuit.n_params()) {
        throw ArgumentError("parameter slot " + std::to_string(slot) +
                            " out of range (" +
                            std::to_string(circuit.n_params()) + " slots)");
    }
}

// C at params with one slot overridden.
inline double shifted_cost(const CircuitSpec &circuit,
                           std::span<const double> params, std::size_t slot,
                           double value) {
    std::vector<double> shifted(params.begin(), params.end());
    shifted[slot] = value;
    return cost_of(evaluate(circuit, shifted));
}

} // namespace detail

[[nodiscard]] inline double global_cost(const CircuitSpec &circuit,
                                        std::span<const double> params) {
    return detail::cost_of(evaluate(circuit, params));
}

[[nodiscard]] inline double
parameter_shift_grad(const CircuitSpec &circuit,
                     std::span<const double> params, std::size_t slot) {
    check_params(circuit, params);
    detail::check_slot(circuit, slot);
    constexpr double shift = std::numbers::pi / 2.0;
    const double plus =
        detail::shifted_cost(circuit, params, slot, params[slot] + shift);
    const double minus =
        detail::shifted_cost(circuit, params, slot, params[slot] - shift);
    return 0.5 * (plus - minus);
}

[[nodiscard]] inline double
finite_difference_grad(const CircuitSpec &circuit,
                       std::span<const double> params, std::size_t slot,
                       double h) {
    check_params(circuit, params);
    detail::check_slot(circuit, slot);
    if (!(h > 0.0)) {
        throw ArgumentError("finite_difference_grad: step h must be > 0");
    }
    const double plus =
        detail::shifted_cost(circuit, params, slot, params[slot] + h);
    const double minus =
        detail::shifted_cost(circuit, params, slot, params[slot] - h);
    return (plus - minus) / (2.0 * h);
}

/**
 * Parameter-shift gradient of the last slot.
 *
 * The gates before the last rotation are simulated once and the two shifted
 * evaluations continue from a copy of that prefix state.
 */
[[nodiscard]] inline double last_param_grad(const CircuitSpec &circuit,
                                            std::span<const double> params) {
    if (circuit.n_params() == 0) {
        throw ArgumentError("last_param_grad: circuit has no parameters");
    }
    check_params(circuit, params);
    const std::size_t slot = circuit.n_params() - 1;
    const std::size_t gate = circuit.gate_of_slot(slot);
    const std::size_t n_gates = circuit.gates().size();

    StateVector prefix(circuit.n_qubits());
    apply_gates(circuit, params, prefix, 0, gate);

    std::vector<double> shifted(params.begin(), params.end());
    constexpr double shift = std::numbers::pi / 2.0;

    auto finish = [&](double value) {
        shifted[slot] = value;
        StateVector state = prefix;
        apply_gates(circuit, shifted, state, gate, n_gates);
        return detail::cost_of(state);
    };
    const double plus = finish(params[slot] + shift);
    const double minus = finish(params[slot] - shift);
    return 0.5 * (plus - minus);
}

/// Parameter-shift gradient of every slot (2 * n_params shifted circuits).
/// The unshifted prefix state is advanced incrementally from slot to slot.
[[nodiscard]] inline GradientVector
full_gradient(const CircuitSpec &circuit, std::span<const double> params) {
    check_params(circuit, params);
    const std::size_t n_gates = circuit.gates().size();
    constexpr double shift = std::numbers::pi / 2.0;

    GradientVector grads(circuit.n_params());
    StateVector prefix(circuit.n_qubits());
    std::size_t prefix_end = 0;
    std::vector<double> shifted(params.begin(), params.end());

    for (std::size_t slot = 0; slot < grads.size(); ++slot) {
        const std::size_t gate = circuit.gate_of_slot(slot);
        apply_gates(circuit, params, prefix, prefix_end, gate);
        prefix_end = gate;

        auto finish = [&](double value) {
            shifted[slot] = value;
            StateVector state = prefix;
            apply_gates(circuit, shifted, state, gate, n_gates);
            return detail::cost_of(state);
        };
        const double plus = finish(params[slot] + shift);
        const double minus = finish(params[slot] - shift);
        shifted[slot] = params[slot];
        grads[slot] = 0.5 * (plus - minus);
    }
    return grads;
}

} // namespace bpinit
