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


#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "dfsgate/dfsgate.hpp"
#include "oracles/lambda_amplitude_equations.hpp"
#include "support.hpp"

namespace dfsgate {
namespace {

Matrix oracle_rows(const LambdaParams& params, const BasisPtr& basis) {
    Matrix table = Matrix::Zero(basis->dim(), basis->dim());
    for (int n = 0; n < basis->n_max(); ++n) {
        for (auto row : detail::kLambdaNames) {
            for (const auto& term : oracle::amplitude_equation(std::string(row), n, params.g, params.omega(),
                                                               params.kappa, params.gamma)) {
                const int m = n + term.photon_offset;
                if (m < 0) continue;
                table(basis->index_of(n, row), basis->index_of(m, term.config)) += term.coeff;
            }
        }
    }
    return table;
}

TEST(LambdaGenerator, MatchesAmplitudeEquations) {
    testing::Sampler sampler(101);
    for (int trial = 0; trial < 20; ++trial) {
        LambdaParams params;
        params.g = sampler.uniform(0.5, 2.0);
        params.kappa = sampler.uniform(0.0, 3.0);
        params.gamma = sampler.uniform(0.0, 0.5);
        params.omega0 = sampler.uniform(0.01, 1.0);
        const int n_max = 1 + trial % 4;
        const BasisPtr basis = build_basis(Scheme::lambda, n_max);
        const Matrix g = build_generator_lambda(params, basis).matrix;
        const Matrix expected = oracle_rows(params, basis);
        const Index interior = n_max * 9;
        ASSERT_LE((g.topRows(interior) - expected.topRows(interior)).cwiseAbs().maxCoeff(), 1e-14)
            << "trial " << trial;
    }
}

TEST(LambdaGenerator, LaserCouplingIntoBusState) {
    LambdaParams params;
    params.omega0 = 0.1;
    const BasisPtr basis = build_basis(Scheme::lambda, 2);
    const Matrix g = build_generator_lambda(params, basis).matrix;
    const Complex element = g(basis->index_of(0, "a"), basis->index_of(0, "10"));
    EXPECT_NEAR(std::abs(element - (-0.5 * kI * params.omega())), 0.0, 1e-16);
}

TEST(LambdaGenerator, LaserOffLeavesEmptyCavityStill) {
    LambdaParams params;
    params.omega0 = 0.0;
    params.gamma = 0.0;
    const BasisPtr basis = build_basis(Scheme::lambda, 3);
    const Matrix g = build_generator_lambda(params, basis).matrix;
    EXPECT_EQ(g.topLeftCorner(9, 9).cwiseAbs().maxCoeff(), 0.0);
}

TEST(LambdaGenerator, DissipativePartIsNegative) {
    testing::Sampler sampler(5);
    for (int trial = 0; trial < 10; ++trial) {
        LambdaParams params = sampler.lambda_params();
        params.gamma = sampler.uniform(0.0, 0.5);
        const Matrix h = kI * build_generator_lambda(params, build_basis(Scheme::lambda, 2)).matrix;
        const Matrix decay = (h - h.adjoint()) / (2.0 * kI);
        const Eigen::SelfAdjointEigenSolver<Matrix> solver(decay);
        EXPECT_LE(solver.eigenvalues().maxCoeff(), 1e-14);
    }
}

TEST(LambdaGenerator, HermitianWithoutLoss) {
    LambdaParams params;
    params.kappa = 0.0;
    params.gamma = 0.0;
    const Generator g = build_generator_lambda(params, build_basis(Scheme::lambda, 3));
    const Matrix h = kI * g.matrix;
    EXPECT_EQ((h - h.adjoint()).cwiseAbs().maxCoeff(), 0.0);
    const double t = pulse_duration(params);
    const PropagatorPlan p = plan(g, t, 10);
    testing::Sampler sampler(1);
    for (const StateVector& s : propagate(p, sampler.unit_state(g.basis)).states) {
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
    }
}

TEST(LambdaGenerator, SchemeMismatch) {
    try {
        build_generator_lambda({}, build_basis(Scheme::raman, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::scheme_mismatch);
    }
}

TEST(PulseDuration, Examples) {
    LambdaParams params;
    params.omega0 = 0.1;
    EXPECT_NEAR(pulse_duration(params), 62.832, 5e-4);
    params.omega0 = 0.02;
    EXPECT_NEAR(pulse_duration(params), 314.159, 5e-4);
    const double t = pulse_duration(params);
    params.omega0 = 0.04;
    EXPECT_DOUBLE_EQ(pulse_duration(params), t / 2.0);
    params.omega0 = 0.0;
    try {
        pulse_duration(params);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::undefined_duration);
    }
}

TEST(EffectiveRates, Examples) {
    LambdaParams params;
    params.omega0 = 0.1;
    EffectiveRates r = effective_rates(params);
    EXPECT_NEAR(r.k1, 3.125e-4, 1e-16);
    EXPECT_NEAR(r.k2, 2.8125e-3, 1e-15);
    params.omega0 = 0.02;
    r = effective_rates(params);
    EXPECT_NEAR(r.k1, 1.25e-5, 1e-18);
    EXPECT_NEAR(r.k2, 1.125e-4, 1e-17);
    params.omega0 = 1e-9;
    r = effective_rates(params);
    EXPECT_LT(r.k2, 1e-17);
    params.kappa = 0.0;
    try {
        effective_rates(params);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::regime_violation);
    }
}

TEST(EffectiveRates, Ordering) {
    testing::Sampler sampler(8);
    for (int trial = 0; trial < 100; ++trial) {
        LambdaParams params = sampler.lambda_params();
        const EffectiveRates r = effective_rates(params);
        ASSERT_GE(r.k1, 0.0);
        ASSERT_GT(r.k2, r.k1);
    }
}

TEST(EffectiveEvolution, LosslessRotation) {
    // With k1 = k2 = 0 the 3x3 block is a rotation about (1,1,0)/sqrt(2);
    // after one pulse c010 has moved entirely into c011.
    const double omega = 0.1 / std::sqrt(2.0);
    Eigen::Matrix3cd m;
    m << 0.0, 0.0, kI * omega, 0.0, 0.0, -kI * omega, kI * omega, -kI * omega, 0.0;
    const double t = 2.0 * kPi / 0.1;
    const Eigen::Vector3cd out = expm(Eigen::Matrix3cd(-0.5 * t * m)) * Eigen::Vector3cd(1.0, 0.0, 0.0);
    EXPECT_LE((out - Eigen::Vector3cd(0.0, 1.0, 0.0)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(EffectiveEvolution, LimitOfWeakDriving) {
    // Vanishing cavity loss and large kappa send k1 -> 0 and k2 -> 0 relative
    // to omega; the library evolution then approaches the lossless rotation.
    LambdaParams params;
    params.omega0 = 0.1;
    params.kappa = 1e6;
    params.g = 1e6;
    DfsAmplitudes start = DfsAmplitudes::Zero();
    start(2) = 1.0;
    const DfsAmplitudes out = effective_dfs_evolution(start, params, pulse_duration(params));
    EXPECT_NEAR(std::abs(out(3)), 1.0, 1e-6);
    EXPECT_NEAR(std::abs(out(2)), 0.0, 1e-6);
}

TEST(EffectiveEvolution, FrozenAndDecayingAmplitudes) {
    LambdaParams params;
    params.omega0 = 0.1;
    const auto [k1, k2] = effective_rates(params);
    for (double t : {0.0, 10.0, 62.8, 400.0}) {
        DfsAmplitudes c = DfsAmplitudes::Zero();
        c(1) = 1.0;
        EXPECT_EQ(effective_dfs_evolution(c, params, t), c);
        c = DfsAmplitudes::Zero();
        c(0) = 1.0;
        EXPECT_NEAR(effective_dfs_evolution(c, params, t)(0).real(), std::exp(-4.0 * k1 * t), 1e-15);
    }
    EXPECT_THROW(effective_dfs_evolution(DfsAmplitudes::Zero(), params, -1.0), Error);
}

TEST(EffectiveEvolution, AgreesWithFullDynamics) {
    for (double omega0 : {0.05, 0.02}) {
        LambdaParams params;
        params.omega0 = omega0;
        params.gamma = 1e-4;
        const Generator g = build_generator_lambda(params, build_basis(Scheme::lambda, 3));
        const double t = pulse_duration(params);
        const PropagatorPlan p = plan(g, t, 40);
        for (auto input : {"10", "11", "00"}) {
            const StateVector start = basis_state(g.basis, 0, input);
            const Trajectory traj = propagate(p, start);
            const DfsAmplitudes c0 = dfs_amplitudes(start);
            double worst = 0.0;
            for (std::size_t k = 0; k < traj.states.size(); ++k) {
                const DfsAmplitudes full = dfs_amplitudes(traj.states[k]);
                const DfsAmplitudes reduced = effective_dfs_evolution(c0, params, traj.times[k]);
                worst = std::max(worst, (full - reduced).cwiseAbs().maxCoeff());
            }
            EXPECT_LE(worst, 2e-2) << omega0 << " " << input;
        }
    }
}

TEST(AnalyticUcond, Examples) {
    LambdaParams params;
    params.omega0 = 0.1;
    const Eigen::Matrix4cd u = analytic_ucond(params);
    EXPECT_NEAR(u(0, 0).real(), 0.92146, 5e-6);
    EXPECT_EQ(u(1, 1), Complex(1.0));
    params.kappa = 1e4;
    params.g = 1e6;
    params.omega0 = 1e-8;
    EXPECT_LE((analytic_ucond(params) - cnot_matrix()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(AnalyticP0, Examples) {
    LambdaParams params;
    params.omega0 = 0.1;
    EXPECT_NEAR(analytic_p0(parse_qubit_state("10"), params).value, 0.81347, 5e-6);
    EXPECT_DOUBLE_EQ(analytic_p0(parse_qubit_state("01"), params).value, 1.0);
    EXPECT_NEAR(analytic_p0(parse_qubit_state("00"), params).value, 0.84292, 5e-6);
}

TEST(AnalyticP0, ClampsOutsideRegime) {
    LambdaParams params;
    params.omega0 = 1.0;
    params.kappa = 0.05;
    const AnalyticP0 p = analytic_p0(parse_qubit_state("10"), params);
    EXPECT_TRUE(p.clamped);
    EXPECT_LT(p.raw, 0.0);
    EXPECT_EQ(p.value, 0.0);
}

TEST(AnalyticP0, RequiresQubitSupport) {
    const BasisPtr basis = build_basis(Scheme::lambda, 1);
    StateVector psi = basis_state(basis, 0, "10");
    EXPECT_NO_THROW(analytic_p0(psi, LambdaParams{}));
    psi.amplitudes(basis->index_of(0, "a")) = 0.1;
    try {
        analytic_p0(psi, LambdaParams{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::non_qubit_support);
    }
}

TEST(AnalyticP0, TracksNumericsAsDrivingWeakens) {
    double previous = INFINITY;
    for (double omega0 : {0.1, 0.05, 0.02}) {
        LambdaParams params;
        params.omega0 = omega0;
        const GateResult r = gate_run(params, parse_qubit_state("10"));
        const double gap = std::abs(r.p0 - analytic_p0(parse_qubit_state("10"), params).value);
        EXPECT_LT(gap, previous);
        previous = gap;
        if (omega0 == 0.1) {
            EXPECT_LE(gap, 5e-2);
        }
        if (omega0 == 0.02) {
            EXPECT_LE(gap, 5e-3);
        }
    }
}

TEST(LambdaRegime, Examples) {
    LambdaParams params;
    params.omega0 = 0.1;
    RegimeReport report = validate_regime_lambda(params);
    EXPECT_TRUE(report.all_pass());
    EXPECT_DOUBLE_EQ(report.find("gamma << Omega")->ratio, 0.0);
    EXPECT_NEAR(report.find("Omega*kappa/g^2 << 1")->ratio, 0.0707, 1e-4);
    EXPECT_NEAR(report.find("Omega << kappa")->ratio, 0.0707, 1e-4);

    params.gamma = params.omega();
    report = validate_regime_lambda(params);
    EXPECT_EQ(report.find("gamma << Omega")->status, RegimeStatus::warn);

    params.gamma = 0.0;
    params.kappa = 0.0;
    EXPECT_EQ(validate_regime_lambda(params).worst(), RegimeStatus::violation);
}

}  // namespace
}  // namespace dfsgate
