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

// Six-level atoms: every transition of the Lambda scheme is replaced by a
// far-detuned Raman transition through an excited level e_j, so that the
// excited levels are barely populated and atomic decay is suppressed.
//
// Levels per atom: ground 0, 1, 2 and excited e0, e1, e2. Strong lasers
// Omega_jj drive j-e_j on both atoms with detuning Delta_j. Weak lasers
// drive 2-e1 on atom 1 (omega21) and 2-e0 on atom 2 (omega20). The cavity
// couples 1-e2. Work is done in the interaction picture where all
// resonance conditions hold exactly, so no optical frequencies appear.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "dfsgate/lambda_gate.hpp"

namespace dfsgate {

struct RamanParams {
    double g = 1.0;
    double kappa = 1e-3;
    std::array<double, 3> delta{1000.0, 1000.0, 1000.0};
    std::array<double, 3> omega_diag{2.0, 2.0, 2.0};
    double omega21 = 0.05;
    double omega20 = 0.05;
    std::array<double, 3> gamma{0.0, 0.0, 0.0};
};

/// Equal detunings, equal strong fields, omega21 = omega20 and equal decay
/// rates. kappa defaults to |g_eff|.
inline RamanParams symmetric_raman_params(double delta, double omega_strong, double omega_weak, double gamma,
                                          double g = 1.0) {
    RamanParams p;
    p.g = g;
    p.delta = {delta, delta, delta};
    p.omega_diag = {omega_strong, omega_strong, omega_strong};
    p.omega20 = omega_weak;
    p.omega21 = omega_weak;
    p.gamma = {gamma, gamma, gamma};
    p.kappa = delta != 0.0 ? std::abs(g * omega_strong / (2.0 * delta)) : 0.0;
    return p;
}

/// Effective Lambda-scheme rates after eliminating the excited levels.
/// Shifts are stored as positive magnitudes; they enter the Hamiltonian
/// with a minus sign.
struct EffectiveLambdaView {
    double omega0_eff = 0.0;
    double omega1_eff = 0.0;
    double g_eff = 0.0;
    /// g^2/Delta_2, per photon, on level 1 of each atom.
    double cavity_shift = 0.0;
    /// Omega_jj^2/(4 Delta_j) on level j of each atom.
    std::array<double, 3> ground_shift{};
    /// Omega_20^2/(4 Delta_0) on level 2 of atom 2.
    double weak_shift_atom2 = 0.0;
    /// Omega_21^2/(4 Delta_1) on level 2 of atom 1.
    double weak_shift_atom1 = 0.0;
};

namespace detail {

inline void require_detunings(const RamanParams& params, const char* where) {
    for (double d : params.delta) {
        if (d == 0.0 || !std::isfinite(d)) throw Error(ErrorKind::regime_violation, std::string(where) + ": zero detuning");
    }
}

inline constexpr Index kE0 = 3;

}  // namespace detail

inline EffectiveLambdaView effective_lambda_view(const RamanParams& params) {
    detail::require_detunings(params, "effective_lambda_view");
    const auto& d = params.delta;
    const auto& w = params.omega_diag;
    EffectiveLambdaView v;
    v.omega0_eff = -params.omega20 * w[0] / (2.0 * d[0]);
    v.omega1_eff = -params.omega21 * w[1] / (2.0 * d[1]);
    v.g_eff = -params.g * w[2] / (2.0 * d[2]);
    v.cavity_shift = params.g * params.g / d[2];
    for (std::size_t j = 0; j < 3; ++j) v.ground_shift[j] = w[j] * w[j] / (4.0 * d[j]);
    v.weak_shift_atom2 = params.omega20 * params.omega20 / (4.0 * d[0]);
    v.weak_shift_atom1 = params.omega21 * params.omega21 / (4.0 * d[1]);
    return v;
}

inline Generator build_generator_raman(const RamanParams& params, const BasisPtr& basis) {
    require_scheme(basis->scheme(), Scheme::raman, "build_generator_raman");
    detail::require_finite_rates({params.g, params.kappa, params.omega20, params.omega21, params.delta[0],
                                  params.delta[1], params.delta[2], params.omega_diag[0], params.omega_diag[1],
                                  params.omega_diag[2], params.gamma[0], params.gamma[1], params.gamma[2]},
                                 "build_generator_raman");
    const detail::ProductSpace space{basis->n_max() + 1, 6};
    const Matrix b = detail::annihilation(space);
    Matrix h = Matrix::Zero(space.dim(), space.dim());
    auto hermitian_drive = [&](int atom, Index lower, Index upper, double rabi) {
        const Matrix down = detail::on_atom(space, atom, lower, upper);
        h += 0.5 * rabi * (down + down.adjoint());
    };
    constexpr Index e0 = detail::kE0;
    for (int atom = 0; atom < 2; ++atom) {
        const Matrix raise_b = detail::on_atom(space, atom, e0 + 2, 1) * b;
        h += kI * params.g * (raise_b - raise_b.adjoint());
        for (Index j = 0; j < 3; ++j) {
            hermitian_drive(atom, j, e0 + j, params.omega_diag[j]);
            const Matrix excited = detail::on_atom(space, atom, e0 + j, e0 + j);
            h += (params.delta[j] - 0.5 * kI * params.gamma[j]) * excited;
        }
    }
    hermitian_drive(0, 2, e0 + 1, params.omega21);
    hermitian_drive(1, 2, e0 + 0, params.omega20);
    h += -0.5 * kI * params.kappa * (b.adjoint() * b);
    return Generator{basis, -kI * h};
}

/// Selects which level-shift terms enter the reduced generator.
struct ShiftTerms {
    bool cavity = true;
    bool ground = true;
    bool weak = true;

    static ShiftTerms none() { return {false, false, false}; }
};

/// Reduced generator on a lambda basis after adiabatic elimination of the
/// excited levels: the Lambda-scheme coupling with g_eff, omega0_eff and
/// omega1_eff, no atomic decay, plus the level shifts selected by `terms`.
inline Generator build_generator_effective(const RamanParams& params, const BasisPtr& basis,
                                           ShiftTerms terms = {}) {
    require_scheme(basis->scheme(), Scheme::lambda, "build_generator_effective");
    const EffectiveLambdaView v = effective_lambda_view(params);
    const Index levels = basis->n_max() + 1;
    const detail::ProductSpace space{levels, 3};
    Matrix h = detail::lambda_product_hamiltonian(v.g_eff, v.omega1_eff, v.omega0_eff, params.kappa, 0.0, levels);
    if (terms.cavity) {
        const Matrix n = detail::photon_number(space);
        for (int atom = 0; atom < 2; ++atom) h -= v.cavity_shift * detail::on_atom(space, atom, 1, 1) * n;
    }
    if (terms.ground) {
        for (int atom = 0; atom < 2; ++atom) {
            for (Index j = 0; j < 3; ++j) h -= v.ground_shift[j] * detail::on_atom(space, atom, j, j);
        }
    }
    if (terms.weak) {
        h -= v.weak_shift_atom2 * detail::on_atom(space, 1, 2, 2);
        h -= v.weak_shift_atom1 * detail::on_atom(space, 0, 2, 2);
    }
    return Generator{basis, -kI * detail::to_lambda_basis(h, levels)};
}

/// Gate time 2 pi / |omega0_eff| = 4 pi Delta_0 / (omega20 Omega_00).
inline double raman_pulse_duration(const RamanParams& params) {
    if (params.omega20 == 0.0 || params.omega_diag[0] == 0.0) {
        throw Error(ErrorKind::undefined_duration, "raman_pulse_duration: weak or strong 0-e0 field is zero");
    }
    return 2.0 * kPi / std::abs(effective_lambda_view(params).omega0_eff);
}

/// Decoherence-free amplitudes (0,00), (0,01), (0,10), (0,11), (0,a) read
/// off a six-level product state.
inline DfsAmplitudes raman_dfs_amplitudes(const StateVector& state) {
    require_scheme(state.basis->scheme(), Scheme::raman, "raman_dfs_amplitudes");
    DfsAmplitudes out;
    for (Index k = 0; k < 4; ++k) out(k) = state.amplitude(0, kQubitLabels[k]);
    out(4) = (state.amplitude(0, "12") - state.amplitude(0, "21")) / std::sqrt(2.0);
    return out;
}

/// Total weight on configurations with at least one atom in an excited level.
inline double excited_population(const StateVector& state) {
    require_scheme(state.basis->scheme(), Scheme::raman, "excited_population");
    double total = 0.0;
    for (Index k = 0; k < state.basis->dim(); ++k) {
        const auto& c = std::get<RamanConfig>(state.basis->label_at(k).config);
        if (c.first >= Level::e0 || c.second >= Level::e0) total += std::norm(state.amplitudes(k));
    }
    return total;
}

inline RegimeReport validate_regime_raman(const RamanParams& params, double threshold = 0.1) {
    RegimeReport report;
    bool detuned = true;
    for (std::size_t j = 0; j < 3; ++j) {
        if (!(params.delta[j] > 0.0)) {
            report.add("Delta_" + std::to_string(j) + " > 0", params.delta[j], 0.0, RegimeStatus::violation);
            detuned = false;
        }
    }
    for (double r : {params.g, params.kappa, params.omega20, params.omega21, params.omega_diag[0], params.omega_diag[1],
                     params.omega_diag[2], params.gamma[0], params.gamma[1], params.gamma[2]}) {
        if (!(r >= 0.0)) {
            report.add("rates >= 0", r, 0.0, RegimeStatus::violation, "rates must be non-negative");
            break;
        }
    }
    if (!detuned) return report;

    const EffectiveLambdaView v = effective_lambda_view(params);
    const double scale = std::max(std::abs(v.omega0_eff), std::abs(v.omega1_eff));
    const double mismatch = scale > 0.0 ? std::abs(v.omega0_eff - v.omega1_eff) / scale : 0.0;
    report.add("omega0_eff == omega1_eff", mismatch, 1e-12,
               mismatch <= 1e-12 ? RegimeStatus::pass : RegimeStatus::violation);
    if (scale == 0.0) report.add("omega0_eff != 0", 0.0, 0.0, RegimeStatus::violation, "no gate without weak fields");

    report.much_less("|omega0_eff| << g_eff^2/kappa", v.omega0_eff,
                     params.kappa > 0.0 ? v.g_eff * v.g_eff / params.kappa : INFINITY, threshold);
    report.much_less("|omega0_eff| << kappa", v.omega0_eff, params.kappa, threshold);
    report.much_less("omega20 << omega00", params.omega20, params.omega_diag[0], threshold);
    report.much_less("omega21 << omega11", params.omega21, params.omega_diag[1], threshold);
    report.much_less("g << omega22", params.g, params.omega_diag[2], threshold);

    std::array<double, 3> shift{};
    for (std::size_t j = 0; j < 3; ++j) shift[j] = params.omega_diag[j] * params.omega_diag[j] / params.delta[j];
    const auto [lo, hi] = std::minmax_element(shift.begin(), shift.end());
    const double spread = *hi > 0.0 ? (*hi - *lo) / *hi : 0.0;
    report.add("equal Omega_jj^2/Delta_j", spread, 1e-12, spread <= 1e-12 ? RegimeStatus::pass : RegimeStatus::warn,
               "unequal shifts add relative phases");

    double largest_rate = std::max({params.g, params.kappa, params.omega20, params.omega21});
    for (std::size_t j = 0; j < 3; ++j) largest_rate = std::max({largest_rate, params.omega_diag[j], params.gamma[j]});
    const double smallest_delta = *std::min_element(params.delta.begin(), params.delta.end());
    report.much_less("Delta >> other rates", largest_rate, smallest_delta, threshold);
    return report;
}

}  // namespace dfsgate
