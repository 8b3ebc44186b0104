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
 * Classical weight-initialization schemes applied to the circuit parameter
 * tensor of logical shape (n_layers, params_per_layer).
 *
 * Each circuit layer is treated as one dense layer whose fan-in and fan-out
 * both equal the number of parameters in the layer (see `fan_for_layer`).
 *
 *   random          U[0, 2pi)
 *   xavier-normal   N(0, 2 / (fan_in + fan_out))
 *   xavier-uniform  U(-l, l), l = sqrt(6 / (fan_in + fan_out))
 *   he              N(0, 2 / fan_in)
 *   lecun           N(0, 1 / fan_in)
 *   orthogonal      rows of a semi-orthogonal matrix, gain 1
 *
 * Angles are returned exactly as drawn; nothing is wrapped into [0, 2pi).
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "circuit.hpp"
#include "errors.hpp"
#include "random.hpp"

namespace bpinit {

enum class InitStrategy {
    Random,
    XavierNormal,
    XavierUniform,
    He,
    LeCun,
    Orthogonal,
};

inline constexpr std::array<InitStrategy, 6> kAllStrategies{
    InitStrategy::Random,     InitStrategy::XavierNormal,
    InitStrategy::XavierUniform, InitStrategy::He,
    InitStrategy::LeCun,      InitStrategy::Orthogonal,
};

[[nodiscard]] constexpr std::string_view strategy_name(InitStrategy s) {
    switch (s) {
    case InitStrategy::Random:
        return "random";
    case InitStrategy::XavierNormal:
        return "xavier-normal";
    case InitStrategy::XavierUniform:
        return "xavier-uniform";
    case InitStrategy::He:
        return "he";
    case InitStrategy::LeCun:
        return "lecun";
    case InitStrategy::Orthogonal:
        return "orthogonal";
    }
    return "?";
}

[[nodiscard]] inline std::optional<InitStrategy>
parse_strategy(std::string_view name) {
    for (const InitStrategy s : kAllStrategies) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

struct FanSpec {
    std::size_t fan_in{1};
    std::size_t fan_out{1};
};

/// The one place that decides how a circuit layer maps onto (fan_in, fan_out).
[[nodiscard]] constexpr FanSpec fan_for_layer(std::size_t params_per_layer) {
    return FanSpec{params_per_layer, params_per_layer};
}

/// Variance of the angle distribution for the Gaussian and uniform schemes.
[[nodiscard]] inline double strategy_variance(InitStrategy s, FanSpec fan) {
    const double in = static_cast<double>(fan.fan_in);
    const double out = static_cast<double>(fan.fan_out);
    switch (s) {
    case InitStrategy::Random:
        return std::numbers::pi * std::numbers::pi / 3.0; // (2pi)^2 / 12
    case InitStrategy::XavierNormal:
    case InitStrategy::XavierUniform:
        return 2.0 / (in + out);
    case InitStrategy::He:
        return 2.0 / in;
    case InitStrategy::LeCun:
        return 1.0 / in;
    case InitStrategy::Orthogonal:
        return 1.0 / out;
    }
    return 0.0;
}

[[nodiscard]] inline double xavier_uniform_limit(FanSpec fan) {
    return std::sqrt(6.0 / static_cast<double>(fan.fan_in + fan.fan_out));
}

/// Row-major dense matrix of doubles.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/**
 * A rows x cols matrix with orthonormal rows (M M^T = I), rows <= cols.
 *
 * A cols x rows standard-Gaussian matrix A is QR-factorized; the columns of Q
 * are sign-corrected so that diag(R) >= 0, which makes the factorization
 * unique and the result Haar-distributed. The transpose of Q is returned.
 */
[[nodiscard]] inline Matrix semi_orthogonal_matrix(std::size_t rows,
                                                   std::size_t cols, Rng &rng) {
    if (rows == 0 || cols == 0) {
        throw ArgumentError("semi_orthogonal_matrix: dimensions must be >= 1");
    }
    if (rows > cols) {
        throw ArgumentError(
            "semi_orthogonal_matrix: rows (" + std::to_string(rows) +
            ") must not exceed cols (" + std::to_string(cols) +
            "); only matrices with orthonormal rows are produced");
    }
    const auto r = static_cast<Eigen::Index>(rows);
    const auto c = static_cast<Eigen::Index>(cols);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd a(c, r);
    for (Eigen::Index i = 0; i < c; ++i) {
        for (Eigen::Index j = 0; j < r; ++j) {
            a(i, j) = gauss(rng);
        }
    }
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(c, r);
    const auto &packed = qr.matrixQR();
    for (Eigen::Index j = 0; j < r; ++j) {
        if (packed(j, j) < 0.0) {
            q.col(j) *= -1.0;
        }
    }
    return q.transpose();
}

namespace detail {

inline double draw_random_angle(Rng &rng) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::uniform_real_distribution<double> dist(0.0, two_pi);
    double x = dist(rng);
    // uniform_real_distribution may round up to the open bound.
    while (x >= two_pi) {
        x = dist(rng);
    }
    return x;
}

// Tall shapes (more layers than parameters per layer) are filled with
// consecutive blocks of at most params_per_layer rows, each block an
// independent semi-orthogonal matrix. Every row keeps unit norm.
inline void fill_orthogonal(ParameterVector &out, std::size_t n_layers,
                            std::size_t params_per_layer, Rng &rng) {
    std::size_t row = 0;
    while (row < n_layers) {
        const std::size_t block = std::min(params_per_layer, n_layers - row);
        const Matrix m = semi_orthogonal_matrix(block, params_per_layer, rng);
        for (std::size_t i = 0; i < block; ++i) {
            for (std::size_t j = 0; j < params_per_layer; ++j) {
                out[(row + i) * params_per_layer + j] =
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
        row += block;
    }
}

} // namespace detail

/// n_layers * params_per_layer angles drawn according to `strategy`.
[[nodiscard]] inline ParameterVector init_params(InitStrategy strategy,
                                                 std::size_t n_layers,
                                                 std::size_t params_per_layer,
                                                 Rng &rng) {
    if (n_layers == 0 || params_per_layer == 0) {
        throw ArgumentError("init_params: dimensions must be >= 1");
    }
    const FanSpec fan = fan_for_layer(params_per_layer);
    ParameterVector out(n_layers * params_per_layer);
    switch (strategy) {
    case InitStrategy::Random:
        for (double &x : out) {
            x = detail::draw_random_angle(rng);
        }
        break;
    case InitStrategy::XavierNormal:
    case InitStrategy::He:
    case InitStrategy::LeCun: {
        std::normal_distribution<double> dist(
            0.0, std::sqrt(strategy_variance(strategy, fan)));
        for (double &x : out) {
            x = dist(rng);
        }
        break;
    }
    case InitStrategy::XavierUniform: {
        const double limit = xavier_uniform_limit(fan);
        std::uniform_real_distribution<double> dist(-limit, limit);
        for (double &x : out) {
            x = dist(rng);
        }
        break;
    }
    case InitStrategy::Orthogonal:
        detail::fill_orthogonal(out, n_layers, params_per_layer, rng);
        break;
    }
    return out;
}

} // namespace bpinit
