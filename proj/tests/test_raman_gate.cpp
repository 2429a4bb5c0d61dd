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

#include "dfsgate/dfsgate.hpp"
#include "support.hpp"

namespace dfsgate {
namespace {

RamanParams reference_setup(double weak = 0.05, double gamma = 0.0) {
    return symmetric_raman_params(1000.0, 2.0, weak, gamma);
}

TEST(RamanGenerator, GroundStatesStillWithLasersOff) {
    RamanParams params = reference_setup();
    params.omega_diag = {0.0, 0.0, 0.0};
    params.omega20 = params.omega21 = 0.0;
    const BasisPtr basis = build_basis(Scheme::raman, 2);
    const Matrix g = build_generator_raman(params, basis).matrix;
    for (auto x1 : {"0", "1", "2"}) {
        for (auto x2 : {"0", "1", "2"}) {
            const std::string config = std::string(x1) + x2;
            EXPECT_EQ((g * basis_state(basis, 0, config).amplitudes).norm(), 0.0) << config;
        }
    }
}

TEST(RamanGenerator, WeakLaserElement) {
    const RamanParams params = reference_setup(0.03);
    const BasisPtr basis = build_basis(Scheme::raman, 1);
    const Matrix h = kI * build_generator_raman(params, basis).matrix;
    const Complex element = h(basis->index_of(0, "e10"), basis->index_of(0, "20"));
    EXPECT_NEAR(std::abs(element - Complex(params.omega21 / 2.0)), 0.0, 1e-16);
}

TEST(RamanGenerator, LossTermsAreTheOnlyAntiHermitianPart) {
    RamanParams params = reference_setup();
    params.gamma = {0.1, 0.2, 0.3};
    params.kappa = 0.7;
    const BasisPtr basis = build_basis(Scheme::raman, 2);
    const Matrix h = kI * build_generator_raman(params, basis).matrix;
    const Matrix anti = 0.5 * (h - h.adjoint());
    Matrix expected = Matrix::Zero(basis->dim(), basis->dim());
    for (Index k = 0; k < basis->dim(); ++k) {
        const Label label = basis->label_at(k);
        const auto& c = std::get<RamanConfig>(label.config);
        double rate = params.kappa * label.photons;
        for (Level level : {c.first, c.second}) {
            if (level >= Level::e0) rate += params.gamma[static_cast<int>(level) - static_cast<int>(Level::e0)];
        }
        expected(k, k) = -0.5 * kI * rate;
    }
    EXPECT_LE((anti - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(EffectiveView, Examples) {
    EffectiveLambdaView v = effective_lambda_view(reference_setup());
    EXPECT_NEAR(v.omega0_eff, -5e-5, 1e-19);
    EXPECT_NEAR(v.g_eff, -1e-3, 1e-18);
    EXPECT_NEAR(v.ground_shift[0], 1e-3, 1e-18);
    RamanParams off = reference_setup();
    off.omega20 = 0.0;
    EXPECT_EQ(effective_lambda_view(off).omega0_eff, 0.0);
    RamanParams bad = reference_setup();
    bad.delta[1] = 0.0;
    EXPECT_THROW(effective_lambda_view(bad), Error);
}

TEST(EffectiveGenerator, GroundShifts) {
    const RamanParams params = reference_setup();
    const EffectiveLambdaView v = effective_lambda_view(params);
    EXPECT_EQ(v.ground_shift[0], v.ground_shift[1]);
    EXPECT_EQ(v.ground_shift[1], v.ground_shift[2]);
    const BasisPtr basis = build_basis(Scheme::lambda, 2);
    const Matrix h = kI * build_generator_effective(params, basis, ShiftTerms{false, true, false}).matrix;
    for (auto config : {"00", "01", "11", "02"}) {
        const Index k = basis->index_of(0, config);
        EXPECT_NEAR(h(k, k).real(), -2e-3, 1e-15) << config;
    }
}

TEST(EffectiveGenerator, ShiftFreeFormIsTheLambdaGenerator) {
    const RamanParams params = reference_setup(0.02);
    const EffectiveLambdaView v = effective_lambda_view(params);
    const BasisPtr basis = build_basis(Scheme::lambda, 2);
    LambdaParams lambda;
    lambda.g = v.g_eff;
    lambda.omega0 = v.omega0_eff;
    lambda.kappa = params.kappa;
    lambda.gamma = 0.0;
    const Matrix a = build_generator_effective(params, basis, ShiftTerms::none()).matrix;
    const Matrix b = build_generator_lambda(lambda, basis).matrix;
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-18);
}

TEST(RamanPulseDuration, Examples) {
    RamanParams params = reference_setup();
    EXPECT_NEAR(raman_pulse_duration(params), 1.25664e5, 1.0);
    const double t = raman_pulse_duration(params);
    params.omega20 *= 2.0;
    EXPECT_NEAR(raman_pulse_duration(params), t / 2.0, 1e-9 * t);
    params = reference_setup();
    params.delta[0] *= 2.0;
    EXPECT_NEAR(raman_pulse_duration(params), 2.0 * t, 1e-9 * t);
    params.omega20 = 0.0;
    try {
        raman_pulse_duration(params);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::undefined_duration);
    }
}

TEST(RamanRegime, Examples) {
    const RegimeReport report = validate_regime_raman(reference_setup());
    EXPECT_EQ(report.worst(), RegimeStatus::warn);
    for (const auto& check : report.checks) {
        if (check.name == "g << omega22") {
            EXPECT_EQ(check.status, RegimeStatus::warn);
            EXPECT_DOUBLE_EQ(check.ratio, 0.5);
        } else {
            EXPECT_EQ(check.status, RegimeStatus::pass) << check.name;
        }
    }

    RamanParams mismatched = reference_setup();
    mismatched.omega21 = 0.04;
    EXPECT_EQ(validate_regime_raman(mismatched).find("omega0_eff == omega1_eff")->status, RegimeStatus::violation);

    RamanParams uneven = reference_setup();
    uneven.omega_diag[1] = 2.5;
    EXPECT_EQ(validate_regime_raman(uneven).find("equal Omega_jj^2/Delta_j")->status, RegimeStatus::warn);
}

TEST(RamanReduction, FullAndEffectiveDynamicsAgree) {
    for (double weak : {0.05, 0.02}) {
        const RamanParams params = reference_setup(weak);
        const double t = raman_pulse_duration(params);
        const Generator full = build_generator_raman(params, build_basis(Scheme::raman, 2));
        const Generator reduced = build_generator_effective(params, build_basis(Scheme::lambda, 2));
        const PropagatorPlan pf = plan(full, t, 40);
        const PropagatorPlan pr = plan(reduced, t, 40);
        for (auto input : {"10", "11", "00"}) {
            const Trajectory a = propagate(pf, basis_state(full.basis, 0, input));
            const Trajectory b = propagate(pr, basis_state(reduced.basis, 0, input));
            double worst = 0.0;
            for (std::size_t k = 0; k < a.states.size(); ++k) {
                worst = std::max(worst, phase_aligned_distance(raman_dfs_amplitudes(a.states[k]),
                                                               dfs_amplitudes(b.states[k])));
            }
            EXPECT_LE(worst, 2e-2) << weak << " " << input;
        }
    }
}

TEST(RamanReduction, EqualShiftsOnlyChangeGlobalPhase) {
    const RamanParams params = reference_setup();
    const EffectiveLambdaView v = effective_lambda_view(params);
    const BasisPtr basis = build_basis(Scheme::lambda, 2);
    const double t = raman_pulse_duration(params);
    const PropagatorPlan shifted = plan(build_generator_effective(params, basis, ShiftTerms{false, true, false}), t, 8);
    const PropagatorPlan bare = plan(build_generator_effective(params, basis, ShiftTerms::none()), t, 8);
    const QubitState psi = parse_qubit_state("10");
    const StateVector start = embed_qubit_state(basis, psi);
    const Trajectory a = propagate(shifted, start);
    const Trajectory b = propagate(bare, start);
    const StateVector target = embed_qubit_state(basis, cnot_target(psi));
    for (std::size_t k = 0; k < a.states.size(); ++k) {
        const Complex phase = std::exp(kI * 2.0 * v.ground_shift[0] * a.times[k]);
        EXPECT_LE((a.states[k].amplitudes - phase * b.states[k].amplitudes).cwiseAbs().maxCoeff(), 1e-9);
    }
    EXPECT_NEAR(*conditional_fidelity(a.states.back(), target), *conditional_fidelity(b.states.back(), target),
                1e-10);
}

TEST(RamanReduction, ExcitedLevelsStayEmpty) {
    const RamanParams params = reference_setup();
    const Generator g = build_generator_raman(params, build_basis(Scheme::raman, 2));
    const PropagatorPlan p = plan(g, raman_pulse_duration(params), 100);
    const double bound = 10.0 * std::pow(2.0 / (2.0 * 1000.0), 2);
    for (auto input : {"10", "11"}) {
        for (const StateVector& s : propagate(p, basis_state(g.basis, 0, input)).states) {
            ASSERT_LE(excited_population(s), bound);
        }
    }
}

}  // namespace
}  // namespace dfsgate
