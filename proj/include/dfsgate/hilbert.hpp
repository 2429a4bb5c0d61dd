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

// Truncated cavity-Fock x two-atom bases, states and operators.
//
// Ordering is photon-number major. Within one photon sector the atomic
// configurations are listed in a fixed order:
//
//   lambda   : 00, 01, 10, 11, 02, 20, a, s, 22
//              with a = (|12> - |21>)/sqrt(2) and s = (|12> + |21>)/sqrt(2)
//   raman    : (x1, x2), x1-major, each x in {0, 1, 2, e0, e1, e2}
//   shelving : A, B, C (no cavity; n_max is always 0)
//
// The first character of a two-atom label is atom 1 (the control qubit).

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dfsgate/common.hpp"

namespace dfsgate {

/// Single-atom level. The three-level scheme only uses g0..g2.
enum class Level : std::uint8_t { g0, g1, g2, e0, e1, e2 };

enum class LambdaConfig : std::uint8_t { c00, c01, c10, c11, c02, c20, a, s, c22 };

struct RamanConfig {
    Level first;
    Level second;

    friend bool operator==(const RamanConfig&, const RamanConfig&) = default;
};

enum class ShelvingLevel : std::uint8_t { A, B, C };

using AtomicConfig = std::variant<LambdaConfig, RamanConfig, ShelvingLevel>;

struct Label {
    int photons = 0;
    AtomicConfig config;

    friend bool operator==(const Label&, const Label&) = default;
};

namespace detail {

inline constexpr std::array<std::string_view, 9> kLambdaNames = {"00", "01", "10", "11", "02",
                                                                 "20", "a",  "s",  "22"};
inline constexpr std::array<std::string_view, 6> kLevelNames = {"0", "1", "2", "e0", "e1", "e2"};
inline constexpr std::array<std::string_view, 3> kShelvingNames = {"A", "B", "C"};

inline bool parse_level(std::string_view& text, Level& out) {
    for (std::size_t k = kLevelNames.size(); k-- > 0;) {
        if (text.starts_with(kLevelNames[k])) {
            out = static_cast<Level>(k);
            text.remove_prefix(kLevelNames[k].size());
            return true;
        }
    }
    return false;
}

}  // namespace detail

inline std::string config_name(const AtomicConfig& config) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, LambdaConfig>) {
                return std::string(detail::kLambdaNames[static_cast<std::size_t>(c)]);
            } else if constexpr (std::is_same_v<T, RamanConfig>) {
                return std::string(detail::kLevelNames[static_cast<std::size_t>(c.first)]) +
                       std::string(detail::kLevelNames[static_cast<std::size_t>(c.second)]);
            } else {
                return std::string(detail::kShelvingNames[static_cast<std::size_t>(c)]);
            }
        },
        config);
}

/// Parses a configuration name in the notation used by `config_name`.
/// Raman labels concatenate the two level names ("1e2", "e01", "10") and
/// also accept a separated form such as "(1,e2)".
inline AtomicConfig parse_config(Scheme scheme, std::string_view text) {
    auto fail = [&]() -> Error {
        return Error(ErrorKind::unknown_label,
                     "unknown " + to_string(scheme) + " configuration '" + std::string(text) + "'");
    };
    switch (scheme) {
        case Scheme::lambda:
            for (std::size_t k = 0; k < detail::kLambdaNames.size(); ++k) {
                if (text == detail::kLambdaNames[k]) return static_cast<LambdaConfig>(k);
            }
            throw fail();
        case Scheme::raman: {
            std::string compact;
            for (char ch : text) {
                if (ch != '(' && ch != ')' && ch != ',' && ch != ' ') compact.push_back(ch);
            }
            std::string_view rest = compact;
            RamanConfig config{};
            if (!detail::parse_level(rest, config.first) || !detail::parse_level(rest, config.second) ||
                !rest.empty()) {
                throw fail();
            }
            return config;
        }
        case Scheme::shelving:
            for (std::size_t k = 0; k < detail::kShelvingNames.size(); ++k) {
                if (text == detail::kShelvingNames[k]) return static_cast<ShelvingLevel>(k);
            }
            throw fail();
    }
    throw fail();
}

/// Deterministic truncated basis. Immutable once built; share it through
/// `BasisPtr` between states, operators and concurrent simulations.
class Basis {
public:
    Basis(Scheme scheme, int n_max) : scheme_(scheme), n_max_(scheme == Scheme::shelving ? 0 : n_max) {
        if (n_max < 0) throw Error(ErrorKind::invalid_argument, "n_max must be >= 0");
    }

    static constexpr Index configs_per_sector(Scheme scheme) {
        switch (scheme) {
            case Scheme::lambda: return 9;
            case Scheme::raman: return 36;
            case Scheme::shelving: return 3;
        }
        return 0;
    }

    Scheme scheme() const { return scheme_; }
    int n_max() const { return n_max_; }
    Index sector_size() const { return configs_per_sector(scheme_); }
    Index dim() const { return (n_max_ + 1) * sector_size(); }

    /// Offset of a configuration inside its photon sector.
    Index config_offset(const AtomicConfig& config) const {
        switch (scheme_) {
            case Scheme::lambda:
                if (auto* c = std::get_if<LambdaConfig>(&config)) return static_cast<Index>(*c);
                break;
            case Scheme::raman:
                if (auto* c = std::get_if<RamanConfig>(&config)) {
                    return static_cast<Index>(c->first) * 6 + static_cast<Index>(c->second);
                }
                break;
            case Scheme::shelving:
                if (auto* c = std::get_if<ShelvingLevel>(&config)) return static_cast<Index>(*c);
                break;
        }
        throw Error(ErrorKind::unknown_label,
                    "configuration '" + config_name(config) + "' does not belong to a " + to_string(scheme_) + " basis");
    }

    Index index_of(const Label& label) const {
        if (label.photons < 0 || label.photons > n_max_) {
            throw Error(ErrorKind::unknown_label, "label (" + std::to_string(label.photons) + "," +
                                                      config_name(label.config) + ") outside photon cutoff " +
                                                      std::to_string(n_max_));
        }
        return label.photons * sector_size() + config_offset(label.config);
    }

    Index index_of(int photons, std::string_view config) const {
        return index_of(Label{photons, parse_config(scheme_, config)});
    }

    Label label_at(Index index) const {
        if (index < 0 || index >= dim()) {
            throw Error(ErrorKind::unknown_label, "basis index " + std::to_string(index) + " out of range");
        }
        const int photons = static_cast<int>(index / sector_size());
        const Index offset = index % sector_size();
        switch (scheme_) {
            case Scheme::lambda: return {photons, static_cast<LambdaConfig>(offset)};
            case Scheme::raman:
                return {photons, RamanConfig{static_cast<Level>(offset / 6), static_cast<Level>(offset % 6)}};
            case Scheme::shelving: return {photons, static_cast<ShelvingLevel>(offset)};
        }
        return {};
    }

private:
    Scheme scheme_;
    int n_max_;
};

using BasisPtr = std::shared_ptr<const Basis>;

inline BasisPtr build_basis(Scheme scheme, int n_max) { return std::make_shared<const Basis>(scheme, n_max); }

/// Complex amplitudes over a basis. Conditioned states are kept
/// unnormalised: the squared norm is the no-photon probability.
struct StateVector {
    BasisPtr basis;
    Vector amplitudes;

    double norm_squared() const { return amplitudes.squaredNorm(); }

    Complex amplitude(int photons, std::string_view config) const {
        return amplitudes(basis->index_of(photons, config));
    }
};

/// Dense square operator bound to a basis.
struct Operator {
    BasisPtr basis;
    Matrix matrix;

    Vector apply(const Vector& v) const { return matrix * v; }
};

/// Generator G of the conditioned dynamics, d psi/dt = G psi with
/// G = -i H_cond (hbar = 1, rates in units of g). Not Hermitian.
struct Generator {
    BasisPtr basis;
    Matrix matrix;
};

inline StateVector basis_state(const BasisPtr& basis, int photons, std::string_view config) {
    StateVector state{basis, Vector::Zero(basis->dim())};
    state.amplitudes(basis->index_of(photons, config)) = 1.0;
    return state;
}

inline StateVector basis_state(const BasisPtr& basis, const Label& label) {
    StateVector state{basis, Vector::Zero(basis->dim())};
    state.amplitudes(basis->index_of(label)) = 1.0;
    return state;
}

/// Qubit amplitudes are ordered 00, 01, 10, 11 (control first).
using QubitState = Eigen::Vector4cd;

inline constexpr std::array<std::string_view, 4> kQubitLabels = {"00", "01", "10", "11"};

/// Places a two-qubit state on the empty-cavity qubit configurations.
inline StateVector embed_qubit_state(const BasisPtr& basis, const QubitState& psi) {
    if (basis->scheme() == Scheme::shelving) {
        throw Error(ErrorKind::scheme_mismatch, "qubit states need a two-atom basis");
    }
    StateVector state{basis, Vector::Zero(basis->dim())};
    for (Index k = 0; k < 4; ++k) state.amplitudes(basis->index_of(0, kQubitLabels[k])) = psi(k);
    return state;
}

inline QubitState qubit_amplitudes(const StateVector& state) {
    QubitState out;
    for (Index k = 0; k < 4; ++k) out(k) = state.amplitude(0, kQubitLabels[k]);
    return out;
}

/// Projector onto the five-dimensional decoherence-free subspace
/// span{|0,00>, |0,01>, |0,10>, |0,11>, |0,a>} of the lambda scheme.
inline Operator dfs_projector(const BasisPtr& basis) {
    require_scheme(basis->scheme(), Scheme::lambda, "dfs_projector");
    Operator projector{basis, Matrix::Zero(basis->dim(), basis->dim())};
    for (auto config : {"00", "01", "10", "11", "a"}) {
        const Index k = basis->index_of(0, config);
        projector.matrix(k, k) = 1.0;
    }
    return projector;
}

/// Writes `n,config,re,im` rows (with header), full double precision.
inline void write_state_csv(std::ostream& out, const StateVector& state) {
    out << "n,config,re,im\n";
    char buffer[128];
    for (Index k = 0; k < state.basis->dim(); ++k) {
        const Label label = state.basis->label_at(k);
        const Complex c = state.amplitudes(k);
        std::snprintf(buffer, sizeof buffer, "%d,%s,%.17g,%.17g\n", label.photons, config_name(label.config).c_str(),
                      c.real(), c.imag());
        out << buffer;
    }
}

/// Reads rows written by `write_state_csv`. Labels missing from the input
/// keep amplitude zero.
inline StateVector read_state_csv(std::istream& in, const BasisPtr& basis) {
    StateVector state{basis, Vector::Zero(basis->dim())};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.starts_with("n,")) continue;
        }
        std::stringstream row(line);
        std::string n, config, re, im;
        if (!std::getline(row, n, ',') || !std::getline(row, config, ',') || !std::getline(row, re, ',') ||
            !std::getline(row, im)) {
            throw Error(ErrorKind::io, "malformed state row '" + line + "'");
        }
        state.amplitudes(basis->index_of(std::stoi(n), config)) = Complex(std::stod(re), std::stod(im));
    }
    return state;
}

}  // namespace dfsgate
