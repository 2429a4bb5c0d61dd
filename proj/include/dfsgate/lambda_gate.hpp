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

// Two three-level (Lambda) atoms in a lossy cavity, driven by one laser per
// atom: 1-2 on atom 1 and 0-2 on atom 2, both with Rabi frequency omega0.
// The cavity couples the 1-2 transition of each atom with strength g.
//
// Conditioned Hamiltonian (hbar = 1):
//
//   H = i g sum_i (|2>_i<1| b - h.c.)
//     + omega0/2 (|0>_2<2| + |1>_1<2| + h.c.)
//     - i kappa/2 b^dagger b - i Gamma/2 sum_i |2>_i<2|
//
// and the generator is G = -i H. The empty cavity together with
// 00, 01, 10, 11 and a = (|12> - |21>)/sqrt(2) spans the decoherence-free
// subspace; a weak laser rotates within it through the bus state a.

#pragma once

#include <cmath>

#include "dfsgate/cnot.hpp"
#include "dfsgate/expm.hpp"
#include "dfsgate/hilbert.hpp"
#include "dfsgate/regime.hpp"
#include "dfsgate/two_atom.hpp"

namespace dfsgate {

struct LambdaParams {
    double g = 1.0;
    double kappa = 1.0;
    double gamma = 0.0;
    /// Rabi frequency of both lasers (Omega_0 = Omega_1).
    double omega0 = 0.1;

    /// Omega = omega0 / sqrt(2), the rate used by the effective equations.
    double omega() const { return omega0 / std::sqrt(2.0); }
};

/// Adiabatic-elimination rates of the decoherence-free dynamics.
struct EffectiveRates {
    double k1 = 0.0;
    double k2 = 0.0;
};

namespace detail {

/// Product-ordered Hamiltonian. Atom 1 is driven on 1-2 with `omega_atom1`
/// and atom 2 on 0-2 with `omega_atom2`.
inline Matrix lambda_product_hamiltonian(double g, double omega_atom1, double omega_atom2, double kappa, double gamma,
                                         Index photon_levels) {
    const ProductSpace space{photon_levels, 3};
    const Matrix b = annihilation(space);
    Matrix h = Matrix::Zero(space.dim(), space.dim());
    for (int atom = 0; atom < 2; ++atom) {
        const Matrix raise_b = on_atom(space, atom, 2, 1) * b;
        h += kI * g * (raise_b - raise_b.adjoint());
        h += -0.5 * kI * gamma * on_atom(space, atom, 2, 2);
    }
    const Matrix drive1 = on_atom(space, 0, 1, 2);
    const Matrix drive2 = on_atom(space, 1, 0, 2);
    h += 0.5 * omega_atom1 * (drive1 + drive1.adjoint());
    h += 0.5 * omega_atom2 * (drive2 + drive2.adjoint());
    h += -0.5 * kI * kappa * (b.adjoint() * b);
    return h;
}

inline void require_finite_rates(std::initializer_list<double> rates, const char* where) {
    for (double r : rates) {
        if (!std::isfinite(r)) throw Error(ErrorKind::non_finite, std::string(where) + ": non-finite rate");
    }
}

}  // namespace detail

inline Generator build_generator_lambda(const LambdaParams& params, const BasisPtr& basis) {
    require_scheme(basis->scheme(), Scheme::lambda, "build_generator_lambda");
    detail::require_finite_rates({params.g, params.kappa, params.gamma, params.omega0}, "build_generator_lambda");
    const Index levels = basis->n_max() + 1;
    const Matrix h = detail::lambda_product_hamiltonian(params.g, params.omega0, params.omega0, params.kappa,
                                                        params.gamma, levels);
    return Generator{basis, -kI * detail::to_lambda_basis(h, levels)};
}

/// The Hermitian atom-cavity coupling i g sum_i (|2>_i<1| b - h.c.).
inline Operator atom_cavity_coupling(const LambdaParams& params, const BasisPtr& basis) {
    require_scheme(basis->scheme(), Scheme::lambda, "atom_cavity_coupling");
    const Index levels = basis->n_max() + 1;
    const Matrix h = detail::lambda_product_hamiltonian(params.g, 0.0, 0.0, 0.0, 0.0, levels);
    return Operator{basis, detail::to_lambda_basis(h, levels)};
}

/// Gate time 2 pi / omega0 (= sqrt(2) pi / Omega).
inline double pulse_duration(const LambdaParams& params) {
    if (!(params.omega0 > 0.0) || !std::isfinite(params.omega0)) {
        throw Error(ErrorKind::undefined_duration, "pulse_duration: omega0 must be > 0");
    }
    return 2.0 * kPi / params.omega0;
}

inline EffectiveRates effective_rates(const LambdaParams& params) {
    if (!(params.kappa > 0.0)) throw Error(ErrorKind::regime_violation, "effective_rates: kappa must be > 0");
    if (!(params.g > 0.0)) throw Error(ErrorKind::regime_violation, "effective_rates: g must be > 0");
    const double omega_sq = params.omega() * params.omega();
    const double k1 = omega_sq * params.kappa / (16.0 * params.g * params.g);
    return {k1, k1 + omega_sq / (2.0 * params.kappa) + params.gamma / 2.0};
}

/// Decoherence-free amplitudes ordered (0,00), (0,01), (0,10), (0,11), (0,a).
using DfsAmplitudes = Eigen::Matrix<Complex, 5, 1>;

inline DfsAmplitudes dfs_amplitudes(const StateVector& state) {
    require_scheme(state.basis->scheme(), Scheme::lambda, "dfs_amplitudes");
    DfsAmplitudes out;
    int k = 0;
    for (auto config : {"00", "01", "10", "11", "a"}) out(k++) = state.amplitude(0, config);
    return out;
}

/// Closed three-variable model on (c010, c011, c0a) plus c000 decaying at
/// 4 k1 and c001 frozen, solved by an exact 3x3 matrix exponential.
inline DfsAmplitudes effective_dfs_evolution(const DfsAmplitudes& initial, const LambdaParams& params, double t) {
    if (!(t >= 0.0)) throw Error(ErrorKind::invalid_argument, "effective_dfs_evolution: t must be >= 0");
    const auto [k1, k2] = effective_rates(params);
    const Complex w = kI * params.omega();
    Eigen::Matrix3cd m;
    m << 10.0 * k1, 2.0 * k1, w,
         2.0 * k1, 2.0 * k1, -w,
         w, -w, 2.0 * k2;
    m *= -0.5 * t;
    const Eigen::Matrix3cd propagator = expm(m);

    DfsAmplitudes out;
    out(0) = initial(0) * std::exp(-4.0 * k1 * t);
    out(1) = initial(1);
    out.tail<3>() = propagator * initial.tail<3>();
    return out;
}

/// First-order conditioned gate on the qubit subspace: the target CNOT minus
/// corrections linear in k1 T and k2 T.
inline Eigen::Matrix4cd analytic_ucond(const LambdaParams& params) {
    const auto [k1, k2] = effective_rates(params);
    const double t = pulse_duration(params);
    Eigen::Matrix4cd u = cnot_matrix();
    const double diagonal = (6.0 * k1 - k2) * t / 4.0;
    const double cross = (10.0 * k1 + k2) * t / 4.0;
    u(2, 2) -= diagonal;
    u(3, 3) -= diagonal;
    u(2, 3) -= cross;
    u(3, 2) -= cross;
    u(0, 0) -= 4.0 * k1 * t;
    return u;
}

struct AnalyticP0 {
    double value = 1.0;
    /// Unclamped first-order value.
    double raw = 1.0;
    bool clamped = false;
};

inline AnalyticP0 analytic_p0(const QubitState& psi, const LambdaParams& params) {
    const auto [k1, k2] = effective_rates(params);
    const double t = pulse_duration(params);
    const Complex c00 = psi(0), c10 = psi(2), c11 = psi(3);
    const double raw = 1.0 - 0.5 * (10.0 * k1 + k2) * t * (std::norm(c10) + std::norm(c11)) -
                       0.5 * (6.0 * k1 - k2) * t * 2.0 * std::real(c10 * std::conj(c11)) -
                       8.0 * k1 * t * std::norm(c00);
    const double clamped = std::clamp(raw, 0.0, 1.0);
    return {clamped, raw, clamped != raw};
}

inline AnalyticP0 analytic_p0(const StateVector& psi, const LambdaParams& params) {
    require_scheme(psi.basis->scheme(), Scheme::lambda, "analytic_p0");
    QubitState qubits = qubit_amplitudes(psi);
    const double outside = psi.norm_squared() - qubits.squaredNorm();
    if (outside > 1e-12) {
        throw Error(ErrorKind::non_qubit_support, "analytic_p0: state has weight " + std::to_string(outside) +
                                                      " outside the qubit configurations");
    }
    return analytic_p0(qubits, params);
}

/// Advisory check of Gamma << Omega << g^2/kappa and kappa.
inline RegimeReport validate_regime_lambda(const LambdaParams& params, double threshold = 0.1) {
    RegimeReport report;
    const double omega = params.omega();
    for (auto [name, value] : {std::pair{"g >= 0", params.g}, std::pair{"kappa >= 0", params.kappa},
                               std::pair{"gamma >= 0", params.gamma}}) {
        if (!(value >= 0.0)) report.add(name, value, 0.0, RegimeStatus::violation, "rates must be non-negative");
    }
    if (!(params.omega0 > 0.0)) {
        report.add("omega0 > 0", params.omega0, 0.0, RegimeStatus::violation, "no gate without a laser");
    }
    report.much_less("gamma << Omega", params.gamma, omega, threshold);
    report.much_less("Omega*kappa/g^2 << 1", omega * params.kappa, params.g * params.g, threshold);
    report.much_less("Omega << kappa", omega, params.kappa, threshold);
    return report;
}

}  // namespace dfsgate
