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

// Single three-level atom with a metastable level A weakly driven to B,
// and B strongly driven to a fast-decaying level C. Starting in A the atom
// stays dark for ~ Omega_s^2 / (Omega_w^2 Gamma_s). Both lasers are resonant.

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "dfsgate/propagator.hpp"
#include "dfsgate/regime.hpp"

namespace dfsgate {

struct ShelvingParams {
    double omega_w = 0.02;
    double omega_s = 1.0;
    double gamma_s = 1.0;
};

inline Generator build_generator_shelving(const ShelvingParams& params) {
    const BasisPtr basis = build_basis(Scheme::shelving, 0);
    Matrix h = Matrix::Zero(3, 3);
    h(0, 1) = h(1, 0) = 0.5 * params.omega_w;
    h(1, 2) = h(2, 1) = 0.5 * params.omega_s;
    h(2, 2) = -0.5 * kI * params.gamma_s;
    return Generator{basis, -kI * h};
}

/// Omega_s^2 / (Omega_w^2 Gamma_s).
inline double dark_time(const ShelvingParams& params) {
    const double denominator = params.omega_w * params.omega_w * params.gamma_s;
    if (!(denominator > 0.0)) throw Error(ErrorKind::undefined_duration, "dark_time: omega_w and gamma_s must be > 0");
    return params.omega_s * params.omega_s / denominator;
}

/// No-photon probability ||exp(G t)|A>||^2 at each time of an increasing grid.
inline std::vector<double> survival_probability(const ShelvingParams& params, std::span<const double> t_grid,
                                                const PlanOptions& options = {}) {
    std::vector<double> out;
    if (t_grid.empty()) return out;
    const Generator generator = build_generator_shelving(params);
    const StateVector start = basis_state(generator.basis, 0, "A");
    if (!(t_grid.back() > 0.0)) {
        out.assign(t_grid.size(), 1.0);
        return out;
    }
    const PropagatorPlan p = plan(generator, t_grid.back(), 1, options);
    const Trajectory trajectory = propagate(p, start, t_grid);
    out.reserve(t_grid.size());
    for (const auto& state : trajectory.states) out.push_back(state.norm_squared());
    return out;
}

struct DarkTimeFit {
    /// 1 / fitted decay rate.
    double dark_time = 0.0;
    double rate = 0.0;
    double window_begin = 0.0;
    double window_end = 0.0;
};

/// Least-squares line through log P0(t) on an evenly sampled window,
/// by default [T_dark/10, 2 T_dark].
inline DarkTimeFit fit_dark_time(const ShelvingParams& params, double window_begin, double window_end,
                                 int samples = 200) {
    if (!(window_end > window_begin) || window_begin < 0.0 || samples < 2) {
        throw Error(ErrorKind::invalid_argument, "fit_dark_time: bad window");
    }
    std::vector<double> t(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) t[k] = window_begin + (window_end - window_begin) * k / (samples - 1);
    const std::vector<double> p0 = survival_probability(params, t);

    double mean_t = 0.0, mean_y = 0.0;
    for (int k = 0; k < samples; ++k) {
        mean_t += t[k];
        mean_y += std::log(p0[k]);
    }
    mean_t /= samples;
    mean_y /= samples;
    double cov = 0.0, var = 0.0;
    for (int k = 0; k < samples; ++k) {
        cov += (t[k] - mean_t) * (std::log(p0[k]) - mean_y);
        var += (t[k] - mean_t) * (t[k] - mean_t);
    }
    DarkTimeFit fit;
    fit.rate = -cov / var;
    fit.dark_time = 1.0 / fit.rate;
    fit.window_begin = window_begin;
    fit.window_end = window_end;
    return fit;
}

inline DarkTimeFit fit_dark_time(const ShelvingParams& params, int samples = 200) {
    const double estimate = dark_time(params);
    return fit_dark_time(params, estimate / 10.0, 2.0 * estimate, samples);
}

/// Advisory check of Omega_w << Omega_s^2/Gamma_s and Gamma_s.
inline RegimeReport validate_regime_shelving(const ShelvingParams& params, double threshold = 0.1) {
    RegimeReport report;
    for (double r : {params.omega_w, params.omega_s, params.gamma_s}) {
        if (!(r >= 0.0)) {
            report.add("rates >= 0", r, 0.0, RegimeStatus::violation, "rates must be non-negative");
            break;
        }
    }
    report.much_less("omega_w << omega_s^2/gamma_s", params.omega_w,
                     params.gamma_s > 0.0 ? params.omega_s * params.omega_s / params.gamma_s : INFINITY, threshold);
    report.much_less("omega_w << gamma_s", params.omega_w, params.gamma_s, threshold);
    return report;
}

}  // namespace dfsgate
