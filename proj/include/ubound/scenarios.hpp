// Copyright 2026 The ubound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file scenarios.hpp
/// \brief Standard operator sets and the spin-1 example family.
///
/// Spin-1 basis ordering is (|+⟩, |0⟩, |−⟩), i.e. m = +1, 0, -1, with ħ = 1.
/// The spin-1 family pairs A = J_x with B = J_y by default; other pairs can be
/// selected through Spin1Axis.

#pragma once

#include <cmath>

#include "ubound/linalg.hpp"

namespace ubound {

struct OperatorTriple {
    HermitianMatrix x;
    HermitianMatrix y;
    HermitianMatrix z;
};

inline OperatorTriple pauli_operators() {
    const Complex i{0.0, 1.0};
    Eigen::MatrixXcd sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    sy << 0.0, -i, i, 0.0;
    sz << 1.0, 0.0, 0.0, -1.0;
    return {HermitianMatrix(sx), HermitianMatrix(sy), HermitianMatrix(sz)};
}

inline OperatorTriple spin1_operators() {
    const Complex i{0.0, 1.0};
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd jx(3, 3), jy(3, 3), jz(3, 3);
    jx << 0.0, r, 0.0,
          r, 0.0, r,
          0.0, r, 0.0;
    jy << 0.0, -i * r, 0.0,
          i * r, 0.0, -i * r,
          0.0, i * r, 0.0;
    jz << 1.0, 0.0, 0.0,
          0.0, 0.0, 0.0,
          0.0, 0.0, -1.0;
    return {HermitianMatrix(jx), HermitianMatrix(jy), HermitianMatrix(jz)};
}

/// cos θ |+⟩ + sin θ |−⟩
inline ComplexVector spin1_state(double theta) {
    return ComplexVector{std::cos(theta), 0.0, std::sin(theta)};
}

enum class Spin1Axis { x, y, z };

inline const HermitianMatrix& pick(const OperatorTriple& ops, Spin1Axis axis) {
    switch (axis) {
        case Spin1Axis::x:
            return ops.x;
        case Spin1Axis::y:
            return ops.y;
        case Spin1Axis::z:
            break;
    }
    return ops.z;
}

struct Spin1Instance {
    double theta;
    ComplexVector state;
    HermitianMatrix A;
    HermitianMatrix B;
    ComplexVector witness;  ///< |0⟩, orthogonal to state for every θ
};

inline Spin1Instance spin1_instance(double theta, Spin1Axis first = Spin1Axis::x,
                                    Spin1Axis second = Spin1Axis::y) {
    OperatorTriple ops = spin1_operators();
    return Spin1Instance{theta, spin1_state(theta), pick(ops, first), pick(ops, second),
                         ComplexVector::basis(3, 1)};
}

}  // namespace ubound
