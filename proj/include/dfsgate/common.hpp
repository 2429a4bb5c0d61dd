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

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dfsgate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// Level scheme a basis (and everything built on it) belongs to.
enum class Scheme { lambda, raman, shelving };

inline std::string to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::lambda: return "lambda";
        case Scheme::raman: return "raman";
        case Scheme::shelving: return "shelving";
    }
    return "unknown";
}

enum class ErrorKind {
    invalid_argument,
    scheme_mismatch,
    unknown_label,
    regime_violation,
    undefined_duration,
    grid_out_of_range,
    non_finite,
    non_qubit_support,
    non_unit_input,
    undefined_fidelity,
    io,
};

/// All library failures are reported through this exception type; `kind()`
/// lets callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline void require_scheme(Scheme actual, Scheme expected, const char* where) {
    if (actual != expected) {
        throw Error(ErrorKind::scheme_mismatch, std::string(where) + ": expected a " + to_string(expected) +
                                                    " basis, got " + to_string(actual));
    }
}

}  // namespace dfsgate
