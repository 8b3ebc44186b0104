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
 * Dense statevector simulator with the RX, RY, RZ and CZ kernels.
 *
 * Conventions:
 *  - Qubit 0 is the least-significant bit of the basis-state index, so the
 *    amplitude of |q_{n-1} ... q_1 q_0> lives at index sum_k q_k 2^k.
 *  - Rotations are R_P(theta) = exp(-i theta P / 2):
 *      RX = [[c, -is], [-is, c]], RY = [[c, -s], [s, c]],
 *      RZ = diag(e^{-i theta/2}, e^{i theta/2}), with c = cos(theta/2),
 *      s = sin(theta/2).
 *  - Gate methods update the state in place. A StateVector is owned by one
 *    thread at a time; independent states can be simulated concurrently.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bpinit {

using Complex = std::complex<double>;

/// Largest register the simulator will allocate (2^26 amplitudes = 1 GiB).
inline constexpr std::size_t kMaxQubits = 26;

enum class Axis : std::uint8_t { X, Y, Z };

[[nodiscard]] inline char axis_name(Axis axis) {
    switch (axis) {
    case Axis::X:
        return 'X';
    case Axis::Y:
        return 'Y';
    case Axis::Z:
        return 'Z';
    }
    return '?';
}

class StateVector {
  public:
    /// The all-zeros state |0...0> on n_qubits qubits.
    explicit StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
        if (n_qubits == 0 || n_qubits > kMaxQubits) {
            throw CapacityError("StateVector: n_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
        }
        amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
        amplitudes_[0] = Complex{1.0, 0.0};
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    [[nodiscard]] double norm_squared() const noexcept {
        double total = 0.0;
        for (const auto &a : amplitudes_) {
            total += std::norm(a);
        }
        return total;
    }

    /// |<0...0|psi>|^2
    [[nodiscard]] double prob_all_zero() const noexcept {
        return std::norm(amplitudes_[0]);
    }

    void apply_rotation(Axis axis, std::size_t qubit, double theta) {
        check_qubit(qubit);
        if (!std::isfinite(theta)) {
            throw ArgumentError("apply_rotation: theta must be finite");
        }
        const double c = std::cos(0.5 * theta);
        const double s = std::sin(0.5 * theta);
        switch (axis) {
        case Axis::X:
            apply_rx(qubit, c, s);
            break;
        case Axis::Y:
            apply_ry(qubit, c, s);
            break;
        case Axis::Z:
            apply_rz(qubit, c, s);
            break;
        }
    }

    /// Negates every amplitude whose basis index has both qubits set.
    void apply_cz(std::size_t qubit_a, std::size_t qubit_b) {
        check_qubit(qubit_a);
        check_qubit(qubit_b);
        if (qubit_a == qubit_b) {
            throw ArgumentError("apply_cz: qubits must differ");
        }
        const std::size_t both = (std::size_t{1} << qubit_a) |
                                 (std::size_t{1} << qubit_b);
        Complex *amp = amplitudes_.data();
        const std::size_t n = amplitudes_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if ((i & both) == both) {
                amp[i] = -amp[i];
            }
        }
    }

  private:
    void check_qubit(std::size_t qubit) const {
        if (qubit >= n_qubits_) {
            throw IndexError("qubit index " + std::to_string(qubit) +
                             " out of range for " + std::to_string(n_qubits_) +
                             "-qubit state");
        }
    }

    // The pair loops below visit (i0, i1 = i0 | mask) for every i0 with the
    // target bit clear. Arithmetic is spelled out on real and imaginary parts
    // so the kernels do not go through the NaN-aware complex multiply.
    template <typename Kernel>
    void for_each_pair(std::size_t qubit, Kernel &&kernel) {
        const std::size_t mask = std::size_t{1} << qubit;
        const std::size_t n = amplitudes_.size();
        Complex *amp = amplitudes_.data();
        for (std::size_t block = 0; block < n; block += 2 * mask) {
            for (std::size_t i0 = block; i0 < block + mask; ++i0) {
                kernel(amp[i0], amp[i0 | mask]);
            }
        }
    }

    void apply_rx(std::size_t qubit, double c, double s) {
        for_each_pair(qubit, [c, s](Complex &a0, Complex &a1) {
            const double r0 = a0.real(), i0 = a0.imag();
            const double r1 = a1.real(), i1 = a1.imag();
            // c*a0 - i s*a1 ; -i s*a0 + c*a1
            a0 = Complex{c * r0 + s * i1, c * i0 - s * r1};
            a1 = Complex{s * i0 + c * r1, -s * r0 + c * i1};
        });
    }

    void apply_ry(std::size_t qubit, double c, double s) {
        for_each_pair(qubit, [c, s](Complex &a0, Complex &a1) {
            const double r0 = a0.real(), i0 = a0.imag();
            const double r1 = a1.real(), i1 = a1.imag();
            a0 = Complex{c * r0 - s * r1, c * i0 - s * i1};
            a1 = Complex{s * r0 + c * r1, s * i0 + c * i1};
        });
    }

    void apply_rz(std::size_t qubit, double c, double s) {
        // e^{-i theta/2} = c - i s on |0>, e^{+i theta/2} = c + i s on |1>
        for_each_pair(qubit, [c, s](Complex &a0, Complex &a1) {
            const double r0 = a0.real(), i0 = a0.imag();
            const double r1 = a1.real(), i1 = a1.imag();
            a0 = Complex{c * r0 + s * i0, c * i0 - s * r0};
            a1 = Complex{c * r1 - s * i1, c * i1 + s * r1};
        });
    }

    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

[[nodiscard]] inline StateVector new_zero_state(std::size_t n_qubits) {
    return StateVector(n_qubits);
}

} // namespace bpinit
