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

/// \file bounds.hpp
/// \brief Witness-state uncertainty relations as explicit (lhs, rhs) pairs.
///
/// Notation used throughout: ψ1 = (A - ⟨A⟩)ψ, ψ2 = (B - ⟨B⟩)ψ, ψ⊥ a unit
/// witness orthogonal to ψ, and
///
///     x = ΔA² - |⟨ψ⊥|ψ1⟩|²,   y = ΔB² - |⟨ψ⊥|ψ2⟩|²,   z = ⟨ψ⊥|ψ2⟩⟨ψ1|ψ⊥⟩.
///
/// Expanding ‖ψ1 + (β + iα)ψ2‖² ≥ |⟨ψ⊥|ψ1 + (β + iα)ψ2⟩|² gives
///
///     x + (α² + β²)·y + 2β·Re(⟨ψ1|ψ2⟩ - z) - 2α·Im(⟨ψ1|ψ2⟩ - z) ≥ 0
///
/// for every real α, β. Every relation below is a consequence of that form:
///
///   - single-parameter form (β = 0), evaluated by eq1_value;
///   - sum relations at α = ±1, β = 0 (mp_sum_inequality);
///   - product relation after minimizing over α (eq2_product);
///   - product relation after minimizing over α and β (eq3_product);
///   - the same, rewritten in sum form via AM-GM (eq4_sum).
///
/// Commutators are stored as ⟨AB⟩ - ⟨BA⟩ (purely imaginary), never
/// pre-multiplied by i.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "ubound/linalg.hpp"
#include "ubound/moments.hpp"

namespace ubound {

/// Witness-dependent scalars of the Schwarz expansion.
struct WitnessContext {
    Complex overlap1{};     ///< ⟨ψ⊥|ψ1⟩
    Complex overlap2{};     ///< ⟨ψ⊥|ψ2⟩
    Complex cross{};        ///< z = ⟨ψ⊥|ψ2⟩⟨ψ1|ψ⊥⟩
    double deficitA = 0.0;  ///< ΔA² - |⟨ψ⊥|ψ1⟩|², clamped at 0
    double deficitB = 0.0;  ///< ΔB² - |⟨ψ⊥|ψ2⟩|², clamped at 0

    friend bool operator==(const WitnessContext&, const WitnessContext&) = default;
};

struct InequalityResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;  ///< lhs - rhs
    bool trivial = false;

    static InequalityResult make(double lhs, double rhs, const Tolerances& tol = {}) {
        return InequalityResult{lhs, rhs, lhs - rhs,
                                std::abs(lhs) <= tol.trivial && std::abs(rhs) <= tol.trivial};
    }

    friend bool operator==(const InequalityResult&, const InequalityResult&) = default;
};

struct BoundReport {
    MomentSet moments;
    std::optional<WitnessContext> witness;
    InequalityResult robertson;
    InequalityResult schrodinger;
    std::optional<InequalityResult> eq2;
    std::optional<InequalityResult> eq3;
    std::optional<InequalityResult> eq4;
    std::optional<InequalityResult> mp_plus;
    std::optional<InequalityResult> mp_minus;

    /// (name, result) for every present inequality, in a fixed order.
    std::vector<std::pair<const char*, InequalityResult>> entries() const {
        std::vector<std::pair<const char*, InequalityResult>> out{{"robertson", robertson},
                                                                  {"schrodinger", schrodinger}};
        auto push = [&](const char* name, const std::optional<InequalityResult>& r) {
            if (r) out.emplace_back(name, *r);
        };
        push("eq2", eq2);
        push("eq3", eq3);
        push("eq4", eq4);
        push("mp_plus", mp_plus);
        push("mp_minus", mp_minus);
        return out;
    }

    double min_gap() const {
        double worst = robertson.gap;
        for (const auto& [name, r] : entries()) worst = std::min(worst, r.gap);
        return worst;
    }

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

namespace detail {

inline double clamp_deficit(double value, const Tolerances& tol, const char* what) {
    if (value >= 0.0) return value;
    if (value >= -tol.deficit) return 0.0;
    std::ostringstream msg;
    msg << what << " = " << value << " is negative beyond tolerance";
    throw NegativeDeficit(msg.str());
}

/// ⟨ψ1|ψ2⟩ - z, the witness-corrected overlap.
inline Complex corrected_overlap(const WitnessContext& ctx, const MomentSet& m) {
    return m.overlap - ctx.cross;
}

/// |⟨[A,B]⟩ - (z - z̄)|²
inline double corrected_comm_sq(const WitnessContext& ctx, const MomentSet& m) {
    return std::norm(m.comm - (ctx.cross - std::conj(ctx.cross)));
}

/// |⟨{A,B}⟩ - 2⟨A⟩⟨B⟩ - (z + z̄)|²
inline double corrected_acov_sq(const WitnessContext& ctx, const MomentSet& m) {
    double d = m.acov - 2.0 * ctx.cross.real();
    return d * d;
}

/// Witness scalars from precomputed deviation vectors ψ1, ψ2.
inline WitnessContext context_from_deviations(const ComplexVector& witness,
                                              const ComplexVector& dev_a,
                                              const ComplexVector& dev_b, const Tolerances& tol) {
    WitnessContext ctx;
    ctx.overlap1 = inner(witness, dev_a);
    ctx.overlap2 = inner(witness, dev_b);
    ctx.cross = ctx.overlap2 * std::conj(ctx.overlap1);
    ctx.deficitA =
        clamp_deficit(dev_a.squared_norm() - std::norm(ctx.overlap1), tol, "deficit for A");
    ctx.deficitB =
        clamp_deficit(dev_b.squared_norm() - std::norm(ctx.overlap2), tol, "deficit for B");
    return ctx;
}

}  // namespace detail

inline WitnessContext witness_context(const HermitianMatrix& a, const HermitianMatrix& b,
                                      const ComplexVector& psi, const ComplexVector& witness,
                                      const Tolerances& tol = {}) {
    ComplexVector::check_same_dim(a.dim(), b.dim());
    ComplexVector::check_same_dim(a.dim(), psi.dim());
    ComplexVector::check_same_dim(a.dim(), witness.dim());
    require_normalized(psi, tol.norm, "state");
    require_normalized(witness, tol.norm, "witness");
    double ov = std::abs(inner(psi, witness));
    if (!(ov <= tol.orth)) {
        std::ostringstream msg;
        msg << "witness is not orthogonal to state (|<psi|witness>| = " << ov << ")";
        throw NotOrthogonal(msg.str());
    }

    return detail::context_from_deviations(witness, deviation_vector(a, psi, tol),
                                           deviation_vector(b, psi, tol), tol);
}

/// ψ1/ΔA: the normalized deviation vector, usable as a witness.
inline ComplexVector normalized_deviation(const HermitianMatrix& a, const ComplexVector& psi,
                                          const Tolerances& tol = {}) {
    ComplexVector dev = deviation_vector(a, psi, tol);
    double n = dev.norm();
    if (!(n > tol.null)) {
        throw ZeroVariance("state is an eigenstate of the observable; deviation vector vanishes");
    }
    return dev.scaled(1.0 / n);
}

/// ‖φ‖² - |⟨ψ⊥|φ⟩|² for φ = ψ1 + (β + iα)ψ2; nonnegative for every α, β.
/// With β = 0 this is the single-parameter form.
inline double eq1_value(const WitnessContext& ctx, const MomentSet& m, double alpha,
                        double beta = 0.0) {
    Complex w = detail::corrected_overlap(ctx, m);
    return ctx.deficitA + (alpha * alpha + beta * beta) * ctx.deficitB + 2.0 * beta * w.real() -
           2.0 * alpha * w.imag();
}

/// The single-parameter form at α = sign, rearranged as a sum relation:
/// ΔA² + ΔB² ≥ |⟨ψ⊥|ψ1⟩|² + |⟨ψ⊥|ψ2⟩|² + 2·sign·Im(⟨ψ1|ψ2⟩ - z).
inline InequalityResult mp_sum_inequality(const WitnessContext& ctx, const MomentSet& m,
                                          int sign, const Tolerances& tol = {}) {
    if (sign != 1 && sign != -1) {
        throw Error("mp_sum_inequality: sign must be +1 or -1");
    }
    double lhs = m.varA + m.varB;
    double rhs = std::norm(ctx.overlap1) + std::norm(ctx.overlap2) +
                 2.0 * sign * detail::corrected_overlap(ctx, m).imag();
    return InequalityResult::make(lhs, rhs, tol);
}

/// x·y ≥ ¼|⟨[A,B]⟩ - (z - z̄)|²
inline InequalityResult eq2_product(const WitnessContext& ctx, const MomentSet& m,
                                    const Tolerances& tol = {}) {
    return InequalityResult::make(ctx.deficitA * ctx.deficitB,
                                  0.25 * detail::corrected_comm_sq(ctx, m), tol);
}

/// x·y ≥ ¼|⟨[A,B]⟩ - (z - z̄)|² + ¼|⟨{A,B}⟩ - 2⟨A⟩⟨B⟩ - (z + z̄)|²
inline InequalityResult eq3_product(const WitnessContext& ctx, const MomentSet& m,
                                    const Tolerances& tol = {}) {
    double rhs = 0.25 * (detail::corrected_comm_sq(ctx, m) + detail::corrected_acov_sq(ctx, m));
    return InequalityResult::make(ctx.deficitA * ctx.deficitB, rhs, tol);
}

/// ΔA² + ΔB² ≥ |⟨ψ⊥|ψ1⟩|² + |⟨ψ⊥|ψ2⟩|² + sqrt(|…comm…|² + |…acov…|²)
inline InequalityResult eq4_sum(const WitnessContext& ctx, const MomentSet& m,
                                const Tolerances& tol = {}) {
    double lhs = m.varA + m.varB;
    double rhs = std::norm(ctx.overlap1) + std::norm(ctx.overlap2) +
                 std::sqrt(detail::corrected_comm_sq(ctx, m) + detail::corrected_acov_sq(ctx, m));
    return InequalityResult::make(lhs, rhs, tol);
}

/// ΔA²ΔB² ≥ ¼|⟨[A,B]⟩|²
inline InequalityResult robertson(const MomentSet& m, const Tolerances& tol = {}) {
    return InequalityResult::make(m.varA * m.varB, 0.25 * std::norm(m.comm), tol);
}

/// ΔA²ΔB² ≥ ¼|⟨[A,B]⟩|² + ¼|⟨{A,B}⟩ - 2⟨A⟩⟨B⟩|²
inline InequalityResult schrodinger(const MomentSet& m, const Tolerances& tol = {}) {
    return InequalityResult::make(m.varA * m.varB,
                                  0.25 * std::norm(m.comm) + 0.25 * m.acov * m.acov, tol);
}

/// Evaluates every applicable relation. Witness-dependent entries are only
/// present when a witness is supplied.
inline BoundReport bound_report(const HermitianMatrix& a, const HermitianMatrix& b,
                                const ComplexVector& psi,
                                const std::optional<ComplexVector>& witness = std::nullopt,
                                const Tolerances& tol = {}) {
    BoundReport report;
    report.moments = moment_set(a, b, psi, tol);
    report.robertson = robertson(report.moments, tol);
    report.schrodinger = schrodinger(report.moments, tol);
    if (witness) {
        WitnessContext ctx = witness_context(a, b, psi, *witness, tol);
        report.witness = ctx;
        report.eq2 = eq2_product(ctx, report.moments, tol);
        report.eq3 = eq3_product(ctx, report.moments, tol);
        report.eq4 = eq4_sum(ctx, report.moments, tol);
        report.mp_plus = mp_sum_inequality(ctx, report.moments, +1, tol);
        report.mp_minus = mp_sum_inequality(ctx, report.moments, -1, tol);
    }
    return report;
}

}  // namespace ubound
