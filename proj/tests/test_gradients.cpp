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
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "bpinit/gradients.hpp"
#include "bpinit/initializers.hpp"

using namespace bpinit;

namespace {

constexpr double kPi = std::numbers::pi;

CircuitSpec single_rx() {
    return CircuitSpec(1, 1, 1, {GateSpec::rotation(Axis::X, 0, 0)});
}

ParameterVector random_angles(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    ParameterVector p(n);
    for (double &x : p) {
        x = angle(rng);
    }
    return p;
}

} // namespace

TEST_CASE("global_cost", "[gradients]") {
    SECTION("training ansatz at 0 has C = 0") {
        const CircuitSpec c = build_training_ansatz(4, 3);
        CHECK(global_cost(c, ParameterVector(c.n_params(), 0.0)) == 0.0);
    }
    SECTION("single RX: C = sin^2(theta/2)") {
        const CircuitSpec c = single_rx();
        CHECK(global_cost(c, ParameterVector{kPi}) == Catch::Approx(1.0).epsilon(1e-15));
        CHECK(global_cost(c, ParameterVector{kPi / 2}) == Catch::Approx(0.5).epsilon(1e-14));
        for (double t : {-2.0, -0.3, 0.9, 2.5, 5.0}) {
            CHECK(global_cost(c, ParameterVector{t}) ==
                  Catch::Approx(std::pow(std::sin(t / 2), 2)).margin(1e-14));
        }
    }
    SECTION("length mismatch") {
        CHECK_THROWS_AS(global_cost(single_rx(), ParameterVector{0.1, 0.2}), ArgumentError);
    }
}

TEST_CASE("parameter_shift_grad", "[gradients]") {
    const CircuitSpec c = single_rx();
    SECTION("zero at the minimum") {
        CHECK(std::abs(parameter_shift_grad(c, ParameterVector{0.0}, 0)) < 1e-15);
    }
    SECTION("0.5 at pi/2 (d/dtheta sin^2(theta/2) = sin(theta)/2)") {
        CHECK(parameter_shift_grad(c, ParameterVector{kPi / 2}, 0) == Catch::Approx(0.5).epsilon(1e-14));
    }
    SECTION("random 4-qubit depth-6 circuit vs finite differences") {
        std::mt19937_64 rng(17);
        Rng crng(17);
        const CircuitSpec rc = sample_variance_ansatz(4, 6, crng);
        const ParameterVector p = random_angles(rc.n_params(), rng);
        const std::size_t slot = rng() % rc.n_params();
        CHECK(std::abs(parameter_shift_grad(rc, p, slot) -
                       finite_difference_grad(rc, p, slot, 1e-4)) < 1e-6);
    }
    SECTION("slot out of range") {
        CHECK_THROWS_AS(parameter_shift_grad(c, ParameterVector{0.0}, 1), ArgumentError);
    }
}

TEST_CASE("finite_difference_grad", "[gradients]") {
    SECTION("single RX at pi/2") {
        CHECK(std::abs(finite_difference_grad(single_rx(), ParameterVector{kPi / 2}, 0, 1e-4) - 0.5) < 1e-8);
    }
    SECTION("leading RZ on |0> has a flat direction") {
        const CircuitSpec c(2, 1, 3,
                            {GateSpec::rotation(Axis::Z, 0, 0),
                             GateSpec::rotation(Axis::X, 0, 1),
                             GateSpec::rotation(Axis::Y, 1, 2), GateSpec::cz(0)});
        const ParameterVector p{0.7, 1.2, -0.4};
        CHECK(std::abs(finite_difference_grad(c, p, 0, 1e-4)) < 1e-9);
        CHECK(std::abs(parameter_shift_grad(c, p, 0)) < 1e-12);
    }
    SECTION("non-positive step") {
        CHECK_THROWS_AS(finite_difference_grad(single_rx(), ParameterVector{0.1}, 0, 0.0), ArgumentError);
        CHECK_THROWS_AS(finite_difference_grad(single_rx(), ParameterVector{0.1}, 0, -1e-3), ArgumentError);
    }
    SECTION("agrees with parameter shift over 100 random circuits") {
        std::mt19937_64 rng(2718);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + rng() % 6;
            const std::size_t depth = 1 + rng() % 10;
            Rng crng(rng());
            const CircuitSpec rc = sample_variance_ansatz(n, depth, crng);
            const ParameterVector p = random_angles(rc.n_params(), rng);
            const std::size_t slot = rng() % rc.n_params();
            const double ps = parameter_shift_grad(rc, p, slot);
            const double fd = finite_difference_grad(rc, p, slot, 1e-4);
            INFO("trial " << trial << " n=" << n << " depth=" << depth);
            CHECK(std::abs(ps - fd) < 1e-6);
        }
    }
}

TEST_CASE("last_param_grad", "[gradients]") {
    SECTION("training ansatz at 0 is stationary") {
        const CircuitSpec c = build_training_ansatz(5, 2);
        const ParameterVector zero(c.n_params(), 0.0);
        CHECK(std::abs(last_param_grad(c, zero)) < 1e-12);
        CHECK(std::abs(finite_difference_grad(c, zero, c.n_params() - 1, 1e-4)) < 1e-9);
    }
    SECTION("single-slot circuit equals slot 0") {
        for (double t : {-1.0, 0.3, 2.0}) {
            CHECK(last_param_grad(single_rx(), ParameterVector{t}) ==
                  parameter_shift_grad(single_rx(), ParameterVector{t}, 0));
        }
    }
    SECTION("prefix-cached route equals the plain shift rule and finite differences") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 40; ++trial) {
            Rng crng(rng());
            const CircuitSpec c = sample_variance_ansatz(1 + rng() % 6, 1 + rng() % 8, crng);
            const ParameterVector p = random_angles(c.n_params(), rng);
            const double cached = last_param_grad(c, p);
            CHECK(std::abs(cached - parameter_shift_grad(c, p, c.n_params() - 1)) < 1e-14);
            CHECK(std::abs(cached - finite_difference_grad(c, p, c.n_params() - 1, 1e-4)) < 1e-6);
        }
    }
    SECTION("parameterless circuit") {
        const CircuitSpec fixed(2, 1, 0, {GateSpec::cz(0)});
        CHECK_THROWS_AS(last_param_grad(fixed, {}), ArgumentError);
    }
}

TEST_CASE("full_gradient", "[gradients]") {
    SECTION("training ansatz at 0 is all zeros") {
        const CircuitSpec c = build_training_ansatz(4, 3);
        const ParameterVector zero(c.n_params(), 0.0);
        const GradientVector g = full_gradient(c, zero);
        REQUIRE(g.size() == c.n_params());
        for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK(std::abs(g[k]) < 1e-12);
            CHECK(std::abs(finite_difference_grad(c, zero, k, 1e-4)) < 1e-9);
        }
    }
    SECTION("single RX at pi/2") {
        const GradientVector g = full_gradient(single_rx(), ParameterVector{kPi / 2});
        REQUIRE(g.size() == 1);
        CHECK(g[0] == Catch::Approx(0.5).epsilon(1e-14));
    }
    SECTION("random circuits: elementwise finite-difference match") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            const CircuitSpec c = build_training_ansatz(1 + rng() % 4, 1 + rng() % 3);
            const ParameterVector p = random_angles(c.n_params(), rng);
            const GradientVector g = full_gradient(c, p);
            for (std::size_t k = 0; k < g.size(); ++k) {
                CHECK(std::abs(g[k] - finite_difference_grad(c, p, k, 1e-4)) < 1e-6);
                CHECK(std::abs(g[k] - parameter_shift_grad(c, p, k)) < 1e-14);
            }
        }
    }
}

TEST_CASE("cost invariants", "[gradients][property]") {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 60; ++trial) {
        Rng crng(rng());
        const CircuitSpec c = sample_variance_ansatz(1 + rng() % 5, 1 + rng() % 6, crng);
        ParameterVector p = random_angles(c.n_params(), rng);
        const double cost = global_cost(c, p);
        CHECK(cost >= 0.0);
        CHECK(cost <= 1.0);
        const std::size_t slot = rng() % c.n_params();
        p[slot] += 2 * kPi;
        CHECK(std::abs(global_cost(c, p) - cost) < 1e-10);
    }
    // g(theta) = -g(theta + pi) for a single RX
    for (double t : {-2.5, -1.0, 0.2, 1.3, 3.0}) {
        CHECK(std::abs(parameter_shift_grad(single_rx(), ParameterVector{t}, 0) +
                       parameter_shift_grad(single_rx(), ParameterVector{t + kPi}, 0)) < 1e-10);
    }
}
