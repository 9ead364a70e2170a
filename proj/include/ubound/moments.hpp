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

#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ubound/linalg.hpp"

namespace ubound {

/// First and second moments of an (A, B, ψ) triple.
struct MomentSet {
    double meanA = 0.0;   ///< ⟨A⟩
    double meanB = 0.0;   ///< ⟨B⟩
    double varA = 0.0;    ///< ΔA² = ‖(A - ⟨A⟩)ψ‖²
    double varB = 0.0;    ///< ΔB²
    Complex overlap{};    ///< ⟨ψ1|ψ2⟩
    Complex comm{};       ///< ⟨[A,B]⟩ = ⟨AB⟩ - ⟨BA⟩, purely imaginary
    double acov = 0.0;    ///< ⟨{A,B}⟩ - 2⟨A⟩⟨B⟩

    friend bool operator==(const MomentSet&, const MomentSet&) = default;
};

namespace detail {

inline void check_state(const HermitianMatrix& a, const ComplexVector& psi,
                        const Tolerances& tol) {
    ComplexVector::check_same_dim(a.dim(), psi.dim());
    require_normalized(psi, tol.norm, "state");
}

/// Real part of a quadratic form value after checking the imaginary part vanishes.
inline double real_or_throw(Complex z, const Tolerances& tol, const char* what) {
    if (!(std::abs(z.imag()) <= tol.herm * std::max(1.0, std::abs(z)))) {
        std::ostringstream msg;
        msg << what << " has imaginary part " << z.imag();
        throw NonRealExpectation(msg.str());
    }
    return z.real();
}

}  // namespace detail

/// ⟨ψ|A|ψ⟩ for a unit ψ.
inline double expectation(const HermitianMatrix& a, const ComplexVector& psi,
                          const Tolerances& tol = {}) {
    detail::check_state(a, psi, tol);
    return detail::real_or_throw(inner(psi, a.apply(psi)), tol, "expectation");
}

/// (A - ⟨A⟩)ψ. Orthogonal to ψ; zero when ψ is an eigenstate of A.
inline ComplexVector deviation_vector(const HermitianMatrix& a, const ComplexVector& psi,
                                      const Tolerances& tol = {}) {
    double mean = expectation(a, psi, tol);
    return a.apply(psi) - psi.scaled(mean);
}

/// ΔA², computed as the squared norm of the deviation vector.
inline double variance(const HermitianMatrix& a, const ComplexVector& psi,
                       const Tolerances& tol = {}) {
    return deviation_vector(a, psi, tol).squared_norm();
}

inline MomentSet moment_set(const HermitianMatrix& a, const HermitianMatrix& b,
                            const ComplexVector& psi, const Tolerances& tol = {}) {
    ComplexVector::check_same_dim(a.dim(), b.dim());
    detail::check_state(a, psi, tol);

    MomentSet m;
    m.meanA = expectation(a, psi, tol);
    m.meanB = expectation(b, psi, tol);
    ComplexVector dev_a = a.apply(psi) - psi.scaled(m.meanA);
    ComplexVector dev_b = b.apply(psi) - psi.scaled(m.meanB);
    m.varA = dev_a.squared_norm();
    m.varB = dev_b.squared_norm();
    m.overlap = inner(dev_a, dev_b);

    // Commutator and anticommutator straight from the operator products, so
    // the overlap identities below are a genuine cross-check.
    const Eigen::MatrixXcd ab = a.entries() * b.entries();
    const Eigen::MatrixXcd ba = b.entries() * a.entries();
    const Eigen::VectorXcd& v = psi.values();
    m.comm = v.dot((ab - ba) * v);
    double anti = detail::real_or_throw(v.dot((ab + ba) * v), tol, "anticommutator");
    m.acov = anti - 2.0 * m.meanA * m.meanB;
    return m;
}

}  // namespace ubound
