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
 * Test-only reference implementations. None of this code goes through the
 * simulator kernels: gates are built as dense 2^n x 2^n matrices from
 * Kronecker products, and rotation matrices come from a Taylor-series matrix
 * exponential of -i theta P / 2 rather than from the closed-form cos/sin.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "bpinit/circuit.hpp"

namespace oracle {

using C = std::complex<double>;

struct Dense {
    std::size_t n{0};
    std::vector<C> a; // row-major n x n

    explicit Dense(std::size_t dim) : n(dim), a(dim * dim, C{0, 0}) {}
    C &operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const C &operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    static Dense identity(std::size_t dim) {
        Dense m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline Dense multiply(const Dense &x, const Dense &y) {
    Dense out(x.n);
    for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t k = 0; k < x.n; ++k) {
            const C xik = x(i, k);
            for (std::size_t j = 0; j < x.n; ++j) {
                out(i, j) += xik * y(k, j);
            }
        }
    }
    return out;
}

inline Dense kron(const Dense &x, const Dense &y) {
    Dense out(x.n * y.n);
    for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t j = 0; j < x.n; ++j) {
            for (std::size_t k = 0; k < y.n; ++k) {
                for (std::size_t l = 0; l < y.n; ++l) {
                    out(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
                }
            }
        }
    }
    return out;
}

inline std::vector<C> apply(const Dense &m, const std::vector<C> &v) {
    std::vector<C> out(m.n, C{0, 0});
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

inline Dense pauli(bpinit::Axis axis) {
    Dense p(2);
    switch (axis) {
    case bpinit::Axis::X:
        p(0, 1) = 1.0;
        p(1, 0) = 1.0;
        break;
    case bpinit::Axis::Y:
        p(0, 1) = C{0, -1};
        p(1, 0) = C{0, 1};
        break;
    case bpinit::Axis::Z:
        p(0, 0) = 1.0;
        p(1, 1) = -1.0;
        break;
    }
    return p;
}

/// exp(m) by scaling and squaring with a 30-term Taylor series.
inline Dense expm(Dense m) {
    int squarings = 0;
    double norm = 0.0;
    for (const C &x : m.a) {
        norm = std::max(norm, std::abs(x));
    }
    while (norm * static_cast<double>(m.n) > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (C &x : m.a) {
        x *= scale;
    }
    Dense result = Dense::identity(m.n);
    Dense term = Dense::identity(m.n);
    for (int k = 1; k <= 30; ++k) {
        term = multiply(term, m);
        for (C &x : term.a) {
            x /= static_cast<double>(k);
        }
        for (std::size_t i = 0; i < result.a.size(); ++i) {
            result.a[i] += term.a[i];
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = multiply(result, result);
    }
    return result;
}

/// exp(-i theta P / 2)
inline Dense rotation(bpinit::Axis axis, double theta) {
    Dense gen = pauli(axis);
    for (C &x : gen.a) {
        x *= C{0, -0.5 * theta};
    }
    return expm(gen);
}

/// Embeds a single-qubit matrix on `qubit` (qubit 0 = rightmost factor).
inline Dense embed(const Dense &single, std::size_t qubit, std::size_t n_qubits) {
    Dense out = Dense::identity(1);
    for (std::size_t k = n_qubits; k-- > 0;) {
        out = kron(out, k == qubit ? single : Dense::identity(2));
    }
    return out;
}

/// CZ = |0><0|_a (x) I + |1><1|_a (x) Z_b
inline Dense cz(std::size_t a, std::size_t b, std::size_t n_qubits) {
    Dense p0(2), p1(2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    Dense first = Dense::identity(1);
    Dense second = Dense::identity(1);
    for (std::size_t k = n_qubits; k-- > 0;) {
        first = kron(first, k == a ? p0 : Dense::identity(2));
        second = kron(second, k == a ? p1 : (k == b ? pauli(bpinit::Axis::Z) : Dense::identity(2)));
    }
    for (std::size_t i = 0; i < first.a.size(); ++i) {
        first.a[i] += second.a[i];
    }
    return first;
}

inline std::vector<C> zero_state(std::size_t n_qubits) {
    std::vector<C> v(std::size_t{1} << n_qubits, C{0, 0});
    v[0] = 1.0;
    return v;
}

inline std::vector<C> evaluate(const bpinit::CircuitSpec &circuit,
                               const std::vector<double> &params) {
    const std::size_t n = circuit.n_qubits();
    std::vector<C> state = zero_state(n);
    for (const auto &g : circuit.gates()) {
        if (g.kind == bpinit::GateKind::CZ) {
            state = oracle::apply(cz(g.target, *g.partner, n), state);
        } else {
            state = oracle::apply(embed(rotation(bpinit::rotation_axis(g.kind),
                                         params[*g.param_slot]),
                                g.target, n),
                          state);
        }
    }
    return state;
}

/// Random circuit of arbitrary (non-layered) gate order for oracle checks.
inline bpinit::CircuitSpec random_circuit(std::size_t n_qubits,
                                          std::size_t n_rotations,
                                          std::mt19937_64 &rng) {
    std::vector<bpinit::GateSpec> gates;
    std::uniform_int_distribution<int> axis(0, 2);
    std::uniform_int_distribution<std::size_t> qubit(0, n_qubits - 1);
    std::bernoulli_distribution add_cz(0.4);
    for (std::size_t k = 0; k < n_rotations; ++k) {
        gates.push_back(bpinit::GateSpec::rotation(
            static_cast<bpinit::Axis>(axis(rng)), qubit(rng), k));
        if (n_qubits > 1 && add_cz(rng)) {
            std::uniform_int_distribution<std::size_t> t(0, n_qubits - 2);
            gates.push_back(bpinit::GateSpec::cz(t(rng)));
        }
    }
    return bpinit::CircuitSpec(n_qubits, 1, n_rotations, std::move(gates));
}

} // namespace oracle
