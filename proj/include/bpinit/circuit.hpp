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
 * Circuit representation and the two layered hardware-efficient ansatz
 * builders.
 *
 * Both builders emit, per layer, the parameterized single-qubit rotations
 * first and then the nearest-neighbour CZ chain CZ(0,1) CZ(1,2) ...
 * CZ(n-2,n-1). Parameter slots are assigned in gate order.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "random.hpp"
#include "simulator.hpp"

namespace bpinit {

enum class GateKind : std::uint8_t { RotX, RotY, RotZ, CZ };

[[nodiscard]] inline const char *gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::RotX:
        return "RX";
    case GateKind::RotY:
        return "RY";
    case GateKind::RotZ:
        return "RZ";
    case GateKind::CZ:
        return "CZ";
    }
    return "?";
}

[[nodiscard]] constexpr GateKind rotation_kind(Axis axis) noexcept {
    switch (axis) {
    case Axis::X:
        return GateKind::RotX;
    case Axis::Y:
        return GateKind::RotY;
    case Axis::Z:
        return GateKind::RotZ;
    }
    return GateKind::RotX;
}

[[nodiscard]] constexpr Axis rotation_axis(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RotY:
        return Axis::Y;
    case GateKind::RotZ:
        return Axis::Z;
    default:
        return Axis::X;
    }
}

struct GateSpec {
    GateKind kind{GateKind::RotX};
    std::size_t target{0};
    std::optional<std::size_t> partner;    // CZ only
    std::optional<std::size_t> param_slot; // rotations only

    [[nodiscard]] bool is_rotation() const noexcept {
        return kind != GateKind::CZ;
    }

    [[nodiscard]] static GateSpec rotation(Axis axis, std::size_t target,
                                           std::size_t slot) {
        return GateSpec{rotation_kind(axis), target, std::nullopt, slot};
    }
    [[nodiscard]] static GateSpec cz(std::size_t target) {
        return GateSpec{GateKind::CZ, target, target + 1, std::nullopt};
    }

    friend bool operator==(const GateSpec &, const GateSpec &) = default;
};

/// Immutable once built; safe to share between threads.
class CircuitSpec {
  public:
    CircuitSpec(std::size_t n_qubits, std::size_t n_layers,
                std::size_t params_per_layer, std::vector<GateSpec> gates)
        : n_qubits_(n_qubits), n_layers_(n_layers),
          params_per_layer_(params_per_layer), gates_(std::move(gates)) {
        // params_per_layer == 0 describes a fixed, parameterless circuit.
        if (n_qubits == 0 || n_layers == 0) {
            throw ArgumentError("CircuitSpec: qubits and layers must be >= 1");
        }
        validate();
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t n_layers() const noexcept { return n_layers_; }
    [[nodiscard]] std::size_t params_per_layer() const noexcept {
        return params_per_layer_;
    }
    [[nodiscard]] std::size_t n_params() const noexcept {
        return n_layers_ * params_per_layer_;
    }
    [[nodiscard]] std::span<const GateSpec> gates() const noexcept {
        return gates_;
    }

    /// Index into gates() of the rotation that owns the given slot.
    [[nodiscard]] std::size_t gate_of_slot(std::size_t slot) const {
        if (slot >= slot_gate_.size()) {
            throw IndexError("parameter slot " + std::to_string(slot) +
                             " out of range (" + std::to_string(n_params()) +
                             " slots)");
        }
        return slot_gate_[slot];
    }

    friend bool operator==(const CircuitSpec &a, const CircuitSpec &b) {
        return a.n_qubits_ == b.n_qubits_ && a.n_layers_ == b.n_layers_ &&
               a.params_per_layer_ == b.params_per_layer_ &&
               a.gates_ == b.gates_;
    }

  private:
    void validate() {
        std::size_t next_slot = 0;
        for (std::size_t g = 0; g < gates_.size(); ++g) {
            const GateSpec &gate = gates_[g];
            if (gate.target >= n_qubits_) {
                throw IndexError("gate target out of range");
            }
            if (gate.is_rotation()) {
                if (!gate.param_slot || gate.partner) {
                    throw ArgumentError(
                        "rotation gates need a slot and no partner");
                }
                if (*gate.param_slot != next_slot) {
                    throw ArgumentError(
                        "parameter slots must be consecutive in gate order");
                }
                slot_gate_.push_back(g);
                ++next_slot;
            } else {
                if (gate.param_slot || !gate.partner ||
                    *gate.partner != gate.target + 1 ||
                    *gate.partner >= n_qubits_) {
                    throw ArgumentError(
                        "CZ gates must be nearest-neighbour (target, target+1) "
                        "with no parameter slot");
                }
            }
        }
        if (next_slot != n_layers_ * params_per_layer_) {
            throw ArgumentError("circuit uses " + std::to_string(next_slot) +
                                " slots but layers x params_per_layer = " +
                                std::to_string(n_layers_ * params_per_layer_));
        }
    }

    std::size_t n_qubits_;
    std::size_t n_layers_;
    std::size_t params_per_layer_;
    std::vector<GateSpec> gates_;
    std::vector<std::size_t> slot_gate_;
};

/// Real angles in radians, row-major over (layer, parameter-within-layer).
using ParameterVector = std::vector<double>;

inline void append_cz_chain(std::vector<GateSpec> &gates,
                            std::size_t n_qubits) {
    for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
        gates.push_back(GateSpec::cz(q));
    }
}

/// Per layer: RX(q), RY(q) for every qubit q, then the CZ chain.
[[nodiscard]] inline CircuitSpec build_training_ansatz(std::size_t n_qubits,
                                                       std::size_t n_layers) {
    if (n_qubits == 0 || n_layers == 0) {
        throw ArgumentError(
            "build_training_ansatz: qubits and layers must be >= 1");
    }
    std::vector<GateSpec> gates;
    gates.reserve(n_layers * (3 * n_qubits - 1));
    std::size_t slot = 0;
    for (std::size_t layer = 0; layer < n_layers; ++layer) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            gates.push_back(GateSpec::rotation(Axis::X, q, slot++));
            gates.push_back(GateSpec::rotation(Axis::Y, q, slot++));
        }
        append_cz_chain(gates, n_qubits);
    }
    return CircuitSpec(n_qubits, n_layers, 2 * n_qubits, std::move(gates));
}

/// Axes the random ansatz may draw from. The default is {X, Y, Z}.
using AxisPool = std::vector<Axis>;

[[nodiscard]] inline AxisPool all_axes() { return {Axis::X, Axis::Y, Axis::Z}; }

/**
 * Random layered circuit: per layer one rotation on every qubit with its axis
 * drawn uniformly from `axes`, then the CZ chain. One parameter per rotation.
 */
[[nodiscard]] inline CircuitSpec
sample_variance_ansatz(std::size_t n_qubits, std::size_t depth, Rng &rng,
                       const AxisPool &axes = all_axes()) {
    if (n_qubits == 0 || depth == 0) {
        throw ArgumentError(
            "sample_variance_ansatz: qubits and depth must be >= 1");
    }
    if (axes.empty()) {
        throw ArgumentError("sample_variance_ansatz: empty axis pool");
    }
    std::uniform_int_distribution<std::size_t> pick(0, axes.size() - 1);
    std::vector<GateSpec> gates;
    gates.reserve(depth * (2 * n_qubits));
    std::size_t slot = 0;
    for (std::size_t layer = 0; layer < depth; ++layer) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            gates.push_back(GateSpec::rotation(axes[pick(rng)], q, slot++));
        }
        append_cz_chain(gates, n_qubits);
    }
    return CircuitSpec(n_qubits, depth, n_qubits, std::move(gates));
}

inline void check_params(const CircuitSpec &circuit,
                         std::span<const double> params) {
    if (params.size() != circuit.n_params()) {
        throw ArgumentError("parameter vector has " +
                            std::to_string(params.size()) +
                            " entries, circuit expects " +
                            std::to_string(circuit.n_params()));
    }
}

/// Applies gates [first, last) of the circuit to `state`.
inline void apply_gates(const CircuitSpec &circuit,
                        std::span<const double> params, StateVector &state,
                        std::size_t first, std::size_t last) {
    const auto gates = circuit.gates();
    for (std::size_t g = first; g < last; ++g) {
        const GateSpec &gate = gates[g];
        if (gate.kind == GateKind::CZ) {
            state.apply_cz(gate.target, *gate.partner);
        } else {
            state.apply_rotation(rotation_axis(gate.kind), gate.target,
                                 params[*gate.param_slot]);
        }
    }
}

/// U(theta)|0...0>, gates applied in list order.
[[nodiscard]] inline StateVector evaluate(const CircuitSpec &circuit,
                                          std::span<const double> params) {
    check_params(circuit, params);
    StateVector state(circuit.n_qubits());
    apply_gates(circuit, params, state, 0, circuit.gates().size());
    return state;
}

} // namespace bpinit
