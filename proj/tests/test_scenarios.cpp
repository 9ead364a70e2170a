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

#include "ubound/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "ubound/bounds.hpp"

using namespace ubound;

namespace {

const Complex I{0.0, 1.0};
const double kPi = std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

/// det(λ·1 - M) for a 3×3 matrix by cofactor expansion.
Complex char_poly3(const HermitianMatrix& h, double lambda) {
    auto m = oracle::from(h);
    for (int k = 0; k < 3; ++k) {
        for (int j = 0; j < 3; ++j) m[k][j] = -m[k][j];
        m[k][k] += lambda;
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST(scenarios, spin1_state_examples) {
    auto s0 = spin1_state(0.0);
    EXPECT_EQ(s0[0], Complex(1.0));
    EXPECT_EQ(s0[1], Complex(0.0));
    EXPECT_EQ(s0[2], Complex(0.0));
    auto s90 = spin1_state(kPi / 2);
    EXPECT_NEAR(std::abs(s90[0]), 0.0, 1e-16);
    EXPECT_EQ(s90[2], Complex(1.0));
    auto s45 = spin1_state(kPi / 4);
    EXPECT_NEAR(s45[0].real(), 1.0 / std::sqrt(2.0), 4e-16);
    EXPECT_NEAR(s45[2].real(), 1.0 / std::sqrt(2.0), 4e-16);
    for (int k = 0; k < 50; ++k) EXPECT_NEAR(spin1_state(0.13 * k).norm(), 1.0, 1e-15);
}

TEST(scenarios, spin1_operator_algebra) {
    auto [jx, jy, jz] = spin1_operators();
    Eigen::MatrixXcd comm = jx.entries() * jy.entries() - jy.entries() * jx.entries();
    EXPECT_LE(max_abs(comm - I * jz.entries()), 1e-12);
    Eigen::MatrixXcd comm_yz = jy.entries() * jz.entries() - jz.entries() * jy.entries();
    EXPECT_LE(max_abs(comm_yz - I * jx.entries()), 1e-12);

    auto out = jx.apply({1.0, 0.0, 0.0});
    EXPECT_NEAR(std::abs(out[1] - 1.0 / std::sqrt(2.0)), 0.0, 1e-16);
    EXPECT_EQ(out[0], Complex(0.0));
    EXPECT_EQ(out[2], Complex(0.0));

    // Characteristic polynomial λ³ - λ: roots {-1, 0, 1}, value 6 at λ = 2.
    for (const auto* j : {&jx, &jy, &jz}) {
        for (double lambda : {-1.0, 0.0, 1.0}) EXPECT_NEAR(std::abs(char_poly3(*j, lambda)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(char_poly3(*j, 2.0) - 6.0), 0.0, 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(j->entries());
        EXPECT_NEAR(es.eigenvalues()(0), -1.0, 1e-14);
        EXPECT_NEAR(es.eigenvalues()(1), 0.0, 1e-14);
        EXPECT_NEAR(es.eigenvalues()(2), 1.0, 1e-14);
    }
}

TEST(scenarios, pauli_algebra) {
    auto [sx, sy, sz] = pauli_operators();
    EXPECT_LE(max_abs(sx.entries() * sx.entries() - Eigen::MatrixXcd::Identity(2, 2)), 0.0);
    EXPECT_LE(max_abs(sx.entries() * sy.entries() - I * sz.entries()), 1e-15);
    Eigen::MatrixXcd comm = sx.entries() * sy.entries() - sy.entries() * sx.entries();
    EXPECT_LE(max_abs(comm - 2.0 * I * sz.entries()), 1e-15);
    EXPECT_EQ(inner({1.0, 0.0}, sz.apply({1.0, 0.0})), Complex(1.0));
}

TEST(scenarios, spin1_instance_fields) {
    for (int k = 0; k <= 180; ++k) {
        double theta = k * kPi / 180;
        Spin1Instance inst = spin1_instance(theta);
        EXPECT_EQ(inst.theta, theta);
        EXPECT_EQ(inner(inst.state, inst.witness), Complex(0.0));
        EXPECT_EQ(inst.witness[1], Complex(1.0));
        WitnessContext ctx = witness_context(inst.A, inst.B, inst.state, inst.witness);
        EXPECT_LE(std::abs(ctx.deficitA), 1e-12);
        EXPECT_LE(std::abs(ctx.deficitB), 1e-12);
        BoundReport rep = bound_report(inst.A, inst.B, inst.state, inst.witness);
        double c2 = std::cos(2 * theta);
        EXPECT_NEAR(rep.robertson.gap, 0.0, 1e-12);
        EXPECT_NEAR(rep.robertson.lhs, c2 * c2 / 4, 1e-12);
    }
}

TEST(scenarios, spin1_instance_reports) {
    BoundReport r0 = [] {
        Spin1Instance inst = spin1_instance(0.0);
        return bound_report(inst.A, inst.B, inst.state, inst.witness);
    }();
    EXPECT_NEAR(r0.eq4->lhs, 1.0, 1e-15);
    EXPECT_NEAR(r0.eq4->rhs, 1.0, 1e-15);

    Spin1Instance i60 = spin1_instance(kPi / 3);
    BoundReport r60 = bound_report(i60.A, i60.B, i60.state, i60.witness);
    EXPECT_LE(r60.eq3->lhs, 1e-12);
    EXPECT_LE(r60.eq3->rhs, 1e-12);
}

TEST(scenarios, spin1_axis_selection) {
    Spin1Instance inst = spin1_instance(0.3, Spin1Axis::z, Spin1Axis::x);
    auto [jx, jy, jz] = spin1_operators();
    EXPECT_EQ(inst.A.entries(), jz.entries());
    EXPECT_EQ(inst.B.entries(), jx.entries());
    Spin1Instance def = spin1_instance(0.3);
    EXPECT_EQ(def.A.entries(), jx.entries());
    EXPECT_EQ(def.B.entries(), jy.entries());
}
