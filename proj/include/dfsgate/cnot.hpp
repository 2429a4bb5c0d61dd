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

#pragma once

#include <cmath>

#include "dfsgate/hilbert.hpp"

namespace dfsgate {

/// Target CNOT on {00, 01, 10, 11}, control qubit first.
inline Eigen::Matrix4cd cnot_matrix() {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    u(2, 3) = 1.0;
    u(3, 2) = 1.0;
    return u;
}

inline QubitState cnot_target(const QubitState& psi, double tolerance = 1e-9) {
    if (std::abs(psi.squaredNorm() - 1.0) > tolerance) {
        throw Error(ErrorKind::non_unit_input, "cnot_target: input has squared norm " + std::to_string(psi.squaredNorm()));
    }
    return cnot_matrix() * psi;
}

/// U^2 = I, U^dagger = U, U^dagger U = I and det U = -1.
inline bool cnot_unitarity_check(double tolerance = 1e-14) {
    const Eigen::Matrix4cd u = cnot_matrix();
    const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
    return (u * u - id).cwiseAbs().maxCoeff() <= tolerance && (u.adjoint() - u).cwiseAbs().maxCoeff() <= tolerance &&
           (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tolerance &&
           std::abs(u.determinant() + 1.0) <= tolerance;
}

/// Parses "10", or an equal-weight superposition such as "00+10", into a
/// normalised qubit state.
inline QubitState parse_qubit_state(std::string_view text) {
    QubitState psi = QubitState::Zero();
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t plus = text.find('+', start);
        const std::string_view term = text.substr(start, plus == std::string_view::npos ? text.npos : plus - start);
        bool found = false;
        for (Index k = 0; k < 4; ++k) {
            if (term == kQubitLabels[k]) {
                psi(k) += 1.0;
                found = true;
            }
        }
        if (!found) throw Error(ErrorKind::unknown_label, "unknown qubit label '" + std::string(term) + "'");
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return psi / psi.norm();
}

}  // namespace dfsgate
