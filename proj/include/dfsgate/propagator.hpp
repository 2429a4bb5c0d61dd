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

// Propagation under a time-independent conditioned generator.
//
// The generator never changes during a run, so a plan computes the one-step
// transfer matrix exp(G dt) once and composes it into the transfer matrix
// for one output interval. Propagation is then a sequence of matrix-vector
// products instead of ODE steps, which matters for the six-level runs where
// the gate lasts ~1e5/g while the detuning oscillates at ~1e3 g.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dfsgate/expm.hpp"
#include "dfsgate/hilbert.hpp"

namespace dfsgate {

struct PlanOptions {
    /// Relative accuracy target for the one-step matrix.
    double tolerance = 1e-9;
    /// Upper bound on ||G dt||_1 for a single step.
    double max_step_norm = 1024.0;
    /// Multiplies the chosen number of sub-steps (2 halves dt).
    long long substep_multiplier = 1;
    int max_refinements = 16;
};

class PropagatorPlan {
public:
    const Generator& generator() const { return generator_; }
    const BasisPtr& basis() const { return generator_.basis; }
    double t_total() const { return t_total_; }
    int n_outputs() const { return n_outputs_; }
    double output_interval() const { return t_total_ / n_outputs_; }
    long long substeps() const { return substeps_; }
    double step() const { return output_interval() / static_cast<double>(substeps_); }
    const Matrix& step_matrix() const { return step_matrix_; }
    const Matrix& output_matrix() const { return output_matrix_; }
    /// ||exp(G dt) - reference|| / ||reference|| measured at plan time.
    double step_error() const { return step_error_; }
    double tolerance() const { return tolerance_; }

    /// Evenly spaced times 0, dT, 2 dT, ..., t_total aligned with the plan.
    std::vector<double> output_grid() const {
        std::vector<double> grid(static_cast<std::size_t>(n_outputs_) + 1);
        for (int k = 0; k <= n_outputs_; ++k) grid[k] = t_total_ * k / n_outputs_;
        return grid;
    }

private:
    friend PropagatorPlan plan(const Generator&, double, int, const PlanOptions&);

    Generator generator_;
    double t_total_ = 0.0;
    int n_outputs_ = 1;
    long long substeps_ = 1;
    Matrix step_matrix_;
    Matrix output_matrix_;
    double step_error_ = 0.0;
    double tolerance_ = 0.0;
};

inline PropagatorPlan plan(const Generator& generator, double t_total, int n_outputs, const PlanOptions& options = {}) {
    if (!generator.matrix.allFinite()) throw Error(ErrorKind::non_finite, "plan: generator has non-finite entries");
    if (!(t_total > 0.0) || !std::isfinite(t_total)) throw Error(ErrorKind::invalid_argument, "plan: t_total must be > 0");
    if (n_outputs < 1) throw Error(ErrorKind::invalid_argument, "plan: n_outputs must be >= 1");
    if (!(options.tolerance > 0.0) || !(options.max_step_norm > 0.0) || options.substep_multiplier < 1) {
        throw Error(ErrorKind::invalid_argument, "plan: invalid options");
    }

    PropagatorPlan p;
    p.generator_ = generator;
    p.t_total_ = t_total;
    p.n_outputs_ = n_outputs;
    p.tolerance_ = options.tolerance;

    const double interval = t_total / n_outputs;
    const double interval_norm = detail::one_norm(generator.matrix) * interval;
    long long substeps = std::max(1LL, static_cast<long long>(std::ceil(interval_norm / options.max_step_norm)));
    substeps *= options.substep_multiplier;

    for (int attempt = 0;; ++attempt) {
        const Matrix scaled = generator.matrix * (interval / static_cast<double>(substeps));
        p.step_matrix_ = expm(scaled);
        const Matrix reference = expm(scaled, 3);
        const double ref_norm = detail::one_norm(reference);
        p.step_error_ = ref_norm > 0.0 ? detail::one_norm(Matrix(p.step_matrix_ - reference)) / ref_norm : 0.0;
        if (p.step_error_ <= options.tolerance) break;
        if (attempt >= options.max_refinements) {
            throw Error(ErrorKind::invalid_argument,
                        "plan: one-step accuracy " + std::to_string(p.step_error_) + " misses tolerance");
        }
        substeps *= 2;
    }
    p.substeps_ = substeps;
    p.output_matrix_ = matrix_power(p.step_matrix_, substeps);
    return p;
}

struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states;
    std::size_t matvec_count = 0;
};

namespace detail {

/// Splits `duration` into whole multiples of `unit` and a remainder;
/// near-integers (relative 1e-12) snap to the integer.
inline long long whole_units(double& duration, double unit) {
    const double ratio = duration / unit;
    const double nearest = std::round(ratio);
    long long count = std::abs(ratio - nearest) <= 1e-12 * std::max(1.0, nearest)
                          ? static_cast<long long>(nearest)
                          : static_cast<long long>(std::floor(ratio));
    count = std::max(count, 0LL);
    duration = std::max(0.0, duration - static_cast<double>(count) * unit);
    if (duration <= 1e-12 * unit) duration = 0.0;
    return count;
}

}  // namespace detail

/// Conditioned (unnormalised) states at every time in `t_grid`. Squared
/// norms are the no-photon probabilities.
inline Trajectory propagate(const PropagatorPlan& plan, const StateVector& state0, std::span<const double> t_grid) {
    if (state0.basis->dim() != plan.basis()->dim() || state0.basis->scheme() != plan.basis()->scheme()) {
        throw Error(ErrorKind::scheme_mismatch, "propagate: state and generator live on different bases");
    }
    const double t_end = plan.t_total() * (1.0 + 1e-12);
    double previous = 0.0;
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        const double t = t_grid[k];
        if (!std::isfinite(t) || t < 0.0 || t > t_end || (k > 0 && !(t > previous))) {
            throw Error(ErrorKind::grid_out_of_range, "propagate: time grid must be increasing within [0, " +
                                                          std::to_string(plan.t_total()) + "], bad entry " +
                                                          std::to_string(t));
        }
        previous = t;
    }

    Trajectory out;
    out.times.assign(t_grid.begin(), t_grid.end());
    out.states.reserve(t_grid.size());
    Vector psi = state0.amplitudes;
    double now = 0.0;
    for (double t : t_grid) {
        double remaining = t - now;
        const long long intervals = detail::whole_units(remaining, plan.output_interval());
        for (long long k = 0; k < intervals; ++k) psi = plan.output_matrix() * psi;
        const long long steps = detail::whole_units(remaining, plan.step());
        for (long long k = 0; k < steps; ++k) psi = plan.step_matrix() * psi;
        out.matvec_count += static_cast<std::size_t>(intervals + steps);
        if (remaining > 0.0) {
            psi = expm(Matrix(plan.generator().matrix * remaining)) * psi;
            ++out.matvec_count;
        }
        now = t;
        out.states.push_back(StateVector{state0.basis, psi});
    }
    return out;
}

inline Trajectory propagate(const PropagatorPlan& plan, const StateVector& state0) {
    const std::vector<double> grid = plan.output_grid();
    return propagate(plan, state0, grid);
}

inline double no_photon_probability(const PropagatorPlan& plan, const StateVector& state0, double t) {
    const double grid[] = {t};
    return propagate(plan, state0, grid).states.front().norm_squared();
}

}  // namespace dfsgate
