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

// Building blocks for Fock (x) atom (x) atom operators in the plain product
// ordering |n> |x1> |x2>. Scheme-specific generators assemble their
// Hamiltonians here and then change basis if needed.

#pragma once

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "dfsgate/common.hpp"

namespace dfsgate::detail {

/// Dimensions of a product space: photon levels and levels per atom.
struct ProductSpace {
    Index photon_levels;
    Index atom_levels;

    Index atom_pair_dim() const { return atom_levels * atom_levels; }
    Index dim() const { return photon_levels * atom_pair_dim(); }
};

/// |to><from| on a single atom.
inline Matrix transition(Index levels, Index to, Index from) {
    Matrix m = Matrix::Zero(levels, levels);
    m(to, from) = 1.0;
    return m;
}

/// Embeds a single-atom operator acting on atom 0 (first) or 1 (second).
inline Matrix on_atom(const ProductSpace& space, int atom, const Matrix& op) {
    const Matrix id_atom = Matrix::Identity(space.atom_levels, space.atom_levels);
    const Matrix pair = atom == 0 ? Matrix(Eigen::kroneckerProduct(op, id_atom))
                                  : Matrix(Eigen::kroneckerProduct(id_atom, op));
    return Eigen::kroneckerProduct(Matrix::Identity(space.photon_levels, space.photon_levels), pair);
}

inline Matrix on_atom(const ProductSpace& space, int atom, Index to, Index from) {
    return on_atom(space, atom, transition(space.atom_levels, to, from));
}

/// Cavity annihilation operator b, truncated at photon_levels - 1 photons.
inline Matrix annihilation(const ProductSpace& space) {
    Matrix b = Matrix::Zero(space.photon_levels, space.photon_levels);
    for (Index n = 1; n < space.photon_levels; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
    return Eigen::kroneckerProduct(b, Matrix::Identity(space.atom_pair_dim(), space.atom_pair_dim()));
}

inline Matrix photon_number(const ProductSpace& space) {
    const Matrix b = annihilation(space);
    return b.adjoint() * b;
}

/// Columns express the symmetrised three-level configurations
/// (00, 01, 10, 11, 02, 20, a, s, 22) in the product ordering x1*3 + x2.
inline Matrix lambda_symmetriser_sector() {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix v = Matrix::Zero(9, 9);
    auto product = [](Index x1, Index x2) { return x1 * 3 + x2; };
    v(product(0, 0), 0) = 1.0;
    v(product(0, 1), 1) = 1.0;
    v(product(1, 0), 2) = 1.0;
    v(product(1, 1), 3) = 1.0;
    v(product(0, 2), 4) = 1.0;
    v(product(2, 0), 5) = 1.0;
    v(product(1, 2), 6) = r;
    v(product(2, 1), 6) = -r;
    v(product(1, 2), 7) = r;
    v(product(2, 1), 7) = r;
    v(product(2, 2), 8) = 1.0;
    return v;
}

inline Matrix lambda_symmetriser(Index photon_levels) {
    return Eigen::kroneckerProduct(Matrix::Identity(photon_levels, photon_levels), lambda_symmetriser_sector());
}

/// Re-expresses a product-ordered three-level operator in the symmetrised
/// lambda ordering (the change of basis is real orthogonal).
inline Matrix to_lambda_basis(const Matrix& product_op, Index photon_levels) {
    const Matrix v = lambda_symmetriser(photon_levels);
    return v.adjoint() * product_op * v;
}

}  // namespace dfsgate::detail
