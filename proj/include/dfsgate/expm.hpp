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

// Dense matrix exponential: scaling and squaring around diagonal Pade
// approximants of degree 3, 5, 7, 9 or 13, with degree and scaling picked
// from the 1-norm (Higham 2005 thresholds for double precision).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "dfsgate/common.hpp"

namespace dfsgate {

namespace detail {

inline constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
inline constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
inline constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                                 25200.0,    1512.0,    56.0,      1.0};
inline constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                                                  2162160.0,     110880.0,     3960.0,       90.0,        1.0};
inline constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0, 129060195264000.0,
    10559470521600.0,    670442572800.0,      33522128640.0,      1323241920.0,       40840800.0,
    960960.0,            16380.0,             182.0,              1.0};

inline constexpr double kTheta3 = 1.495585217958292e-2;
inline constexpr double kTheta5 = 2.539398330063230e-1;
inline constexpr double kTheta7 = 9.504178996162932e-1;
inline constexpr double kTheta9 = 2.097847961257068e0;
inline constexpr double kTheta13 = 5.371920351148152e0;

template <typename Mat>
double one_norm(const Mat& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

/// Low-degree approximant from the even/odd power split.
template <typename Mat, std::size_t N>
Mat pade_low(const Mat& a, const std::array<double, N>& b) {
    const Index n = a.rows();
    const Mat id = Mat::Identity(n, n);
    const Mat a2 = a * a;
    Mat power = id;
    Mat u_inner = Mat::Zero(n, n);
    Mat v = Mat::Zero(n, n);
    for (std::size_t k = 0; k < N; k += 2) {
        v += b[k] * power;
        u_inner += b[k + 1] * power;
        power = power * a2;
    }
    const Mat u = a * u_inner;
    return (v - u).partialPivLu().solve(v + u);
}

template <typename Mat>
Mat pade13(const Mat& a) {
    const auto& b = kPade13;
    const Index n = a.rows();
    const Mat id = Mat::Identity(n, n);
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    const Mat a6 = a4 * a2;
    const Mat u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    const Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    return (v - u).partialPivLu().solve(v + u);
}

}  // namespace detail

/// exp(a) for a square dense matrix. `extra_squarings` forces the degree-13
/// branch with that many additional halvings, which gives an independent,
/// tighter evaluation used for accuracy checks.
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& expr, int extra_squarings = 0) {
    using Mat = typename Derived::PlainObject;
    const Mat a = expr;
    if (a.rows() != a.cols()) throw Error(ErrorKind::invalid_argument, "expm: matrix is not square");
    if (!a.allFinite()) throw Error(ErrorKind::non_finite, "expm: matrix has non-finite entries");
    if (a.rows() == 0) return a;

    const double norm = detail::one_norm(a);
    if (extra_squarings == 0) {
        if (norm <= detail::kTheta3) return detail::pade_low(a, detail::kPade3);
        if (norm <= detail::kTheta5) return detail::pade_low(a, detail::kPade5);
        if (norm <= detail::kTheta7) return detail::pade_low(a, detail::kPade7);
        if (norm <= detail::kTheta9) return detail::pade_low(a, detail::kPade9);
    }

    int squarings = norm > detail::kTheta13 ? static_cast<int>(std::ceil(std::log2(norm / detail::kTheta13))) : 0;
    squarings = std::max(squarings, 0) + std::max(extra_squarings, 0);
    Mat result = detail::pade13(Mat(a * std::ldexp(1.0, -squarings)));
    for (int k = 0; k < squarings; ++k) result = result * result;
    if (!result.allFinite()) throw Error(ErrorKind::non_finite, "expm: result overflowed");
    return result;
}

/// Integer matrix power by binary exponentiation.
template <typename Derived>
typename Derived::PlainObject matrix_power(const Eigen::MatrixBase<Derived>& a, long long exponent) {
    using Mat = typename Derived::PlainObject;
    Mat result = Mat::Identity(a.rows(), a.cols());
    Mat base = a;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

}  // namespace dfsgate
