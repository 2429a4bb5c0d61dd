// Copyright 2026 The dfsgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded generators for property tests.

#pragma once

#include <cstdint>
#include <random>

#include "dfsgate/dfsgate.hpp"

namespace dfsgate::testing {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    Complex gaussian() {
        std::normal_distribution<double> n;
        return {n(engine_), n(engine_)};
    }

    /// Haar-like unit vector of length `dim`.
    Vector unit_vector(Index dim) {
        Vector v(dim);
        for (Index k = 0; k < dim; ++k) v(k) = gaussian();
        return v / v.norm();
    }

    StateVector unit_state(const BasisPtr& basis) { return StateVector{basis, unit_vector(basis->dim())}; }

    QubitState qubit_state() { return unit_vector(4); }

    Matrix matrix(Index dim) {
        Matrix m(dim, dim);
        for (Index r = 0; r < dim; ++r) {
            for (Index c = 0; c < dim; ++c) m(r, c) = gaussian();
        }
        return m;
    }

    /// Weak-driving Lambda parameters inside the working regime.
    LambdaParams lambda_params() {
        LambdaParams p;
        p.kappa = uniform(0.5, 2.0);
        p.omega0 = log_uniform(0.005, 0.1);
        p.gamma = uniform(0.0, 1e-3);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dfsgate::testing
