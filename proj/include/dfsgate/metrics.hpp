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

// Gate-level observables for a single CNOT pulse: success probability
// (no photon emitted during the pulse) and the fidelity of the conditioned
// output with respect to the ideal CNOT output.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <variant>

#include "dfsgate/cnot.hpp"
#include "dfsgate/lambda_gate.hpp"
#include "dfsgate/propagator.hpp"
#include "dfsgate/raman_gate.hpp"

namespace dfsgate {

using SchemeParams = std::variant<LambdaParams, RamanParams>;

/// Smallest photon cutoff for which one more photon level moves p0 and the
/// fidelity by less than 1e-6 across the documented parameter ranges.
inline int default_n_max(Scheme scheme) {
    switch (scheme) {
        case Scheme::lambda: return 3;
        case Scheme::raman: return 2;
        case Scheme::shelving: return 0;
    }
    return 2;
}

struct GateOptions {
    /// Photon cutoff; negative selects `default_n_max`.
    int n_max = -1;
    PlanOptions plan;
    /// Lambda scheme only: after the pulse, evolve field-free (lasers off,
    /// damping on) for 5/Gamma before measuring.
    bool relaxation_window = false;
    double regime_threshold = 0.1;
};

struct GateResult {
    Scheme scheme = Scheme::lambda;
    double p0 = 0.0;
    /// |<U_CNOT psi|final>|^2 / p0; empty when p0 == 0.
    std::optional<double> fidelity;
    /// |<U_CNOT psi|final>|^2.
    double fidelity_unconditional = 0.0;
    double gate_time = 0.0;
    double relaxation_time = 0.0;
    StateVector final_state;
    RegimeReport regime;
};

/// Overlap fidelity of an unnormalised conditioned state with a normalised
/// target; empty if the conditioned state has zero norm.
inline std::optional<double> conditional_fidelity(const StateVector& final_state, const StateVector& target) {
    const double p0 = final_state.norm_squared();
    if (!(p0 > 0.0)) return std::nullopt;
    return std::norm(target.amplitudes.dot(final_state.amplitudes)) / p0;
}

/// sup_k |a_k - e^{i phi} b_k|, where phi aligns the phase of b with a on
/// the largest-magnitude entry of a.
template <typename VecA, typename VecB>
double phase_aligned_distance(const VecA& a, const VecB& b) {
    Index pivot = 0;
    a.cwiseAbs().maxCoeff(&pivot);
    Complex phase = 1.0;
    if (std::abs(a(pivot)) > 0.0 && std::abs(b(pivot)) > 0.0) {
        phase = (a(pivot) / std::abs(a(pivot))) / (b(pivot) / std::abs(b(pivot)));
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

namespace detail {

inline GateResult finish_gate(Scheme scheme, const StateVector& final_state, const QubitState& psi, double gate_time) {
    GateResult result;
    result.scheme = scheme;
    result.gate_time = gate_time;
    result.final_state = final_state;
    result.p0 = std::clamp(final_state.norm_squared(), 0.0, 1.0);
    const StateVector target = embed_qubit_state(final_state.basis, cnot_matrix() * psi);
    result.fidelity_unconditional = std::norm(target.amplitudes.dot(final_state.amplitudes));
    result.fidelity = conditional_fidelity(final_state, target);
    return result;
}

inline StateVector evolve_for(const Generator& generator, const StateVector& start, double duration,
                              const PlanOptions& options) {
    const PropagatorPlan p = plan(generator, duration, 1, options);
    const double grid[] = {duration};
    return propagate(p, start, grid).states.front();
}

}  // namespace detail

inline GateResult gate_run(const LambdaParams& params, const QubitState& psi, const GateOptions& options = {}) {
    const BasisPtr basis = build_basis(Scheme::lambda, options.n_max < 0 ? default_n_max(Scheme::lambda) : options.n_max);
    const double gate_time = pulse_duration(params);
    StateVector state = detail::evolve_for(build_generator_lambda(params, basis), embed_qubit_state(basis, psi),
                                           gate_time, options.plan);
    double relaxation = 0.0;
    if (options.relaxation_window) {
        if (!(params.gamma > 0.0)) {
            throw Error(ErrorKind::invalid_argument, "relaxation window needs gamma > 0 (duration 5/gamma)");
        }
        relaxation = 5.0 / params.gamma;
        LambdaParams dark = params;
        dark.omega0 = 0.0;
        state = detail::evolve_for(build_generator_lambda(dark, basis), state, relaxation, options.plan);
    }
    GateResult result = detail::finish_gate(Scheme::lambda, state, psi, gate_time);
    result.relaxation_time = relaxation;
    result.regime = validate_regime_lambda(params, options.regime_threshold);
    return result;
}

inline GateResult gate_run(const RamanParams& params, const QubitState& psi, const GateOptions& options = {}) {
    if (options.relaxation_window) {
        throw Error(ErrorKind::invalid_argument, "relaxation window is only defined for the lambda scheme");
    }
    const BasisPtr basis = build_basis(Scheme::raman, options.n_max < 0 ? default_n_max(Scheme::raman) : options.n_max);
    const double gate_time = raman_pulse_duration(params);
    const StateVector state = detail::evolve_for(build_generator_raman(params, basis), embed_qubit_state(basis, psi),
                                                 gate_time, options.plan);
    GateResult result = detail::finish_gate(Scheme::raman, state, psi, gate_time);
    result.regime = validate_regime_raman(params, options.regime_threshold);
    return result;
}

inline GateResult gate_run(const SchemeParams& params, const QubitState& psi, const GateOptions& options = {}) {
    return std::visit([&](const auto& p) { return gate_run(p, psi, options); }, params);
}

}  // namespace dfsgate
