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

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ubound/bounds.hpp"
#include "ubound/linalg.hpp"
#include "ubound/moments.hpp"

namespace ubound {

/// f(β, α) = a + (β² + α²)·b + β·s + α·c, the Schwarz form in the two free
/// parameters of φ = ψ1 + (β + iα)ψ2.
struct QuadraticForm {
    double a = 0.0;  ///< constant term, deficit of A
    double b = 0.0;  ///< quadratic coefficient, deficit of B
    double c = 0.0;  ///< α-linear coefficient, -2·Im(⟨ψ1|ψ2⟩ - z)
    double s = 0.0;  ///< β-linear coefficient,  2·Re(⟨ψ1|ψ2⟩ - z)

    double operator()(double beta, double alpha) const {
        return a + (beta * beta + alpha * alpha) * b + beta * s + alpha * c;
    }
};

struct AlphaMinimum {
    double alpha = 0.0;
    double value = 0.0;
};

struct PlaneMinimum {
    double beta = 0.0;
    double alpha = 0.0;
    double value = 0.0;
};

inline QuadraticForm quadratic_form(const WitnessContext& ctx, const MomentSet& m) {
    Complex w = m.overlap - ctx.cross;
    return QuadraticForm{ctx.deficitA, ctx.deficitB, -2.0 * w.imag(), 2.0 * w.real()};
}

namespace detail {

inline void check_degenerate_linear(double coeff, const char* name, const Tolerances& tol) {
    if (std::abs(coeff) > tol.degenerate) {
        throw DegenerateInconsistent(std::string("quadratic coefficient vanishes but ") + name +
                                     " = " + std::to_string(coeff));
    }
}

}  // namespace detail

/// Minimum of f(0, α) over α. Non-negativity of the minimum is the product
/// relation a·b ≥ c²/4.
inline AlphaMinimum minimize_alpha(const QuadraticForm& q, const Tolerances& tol = {}) {
    if (q.b > tol.degenerate) {
        return {-q.c / (2.0 * q.b), q.a - q.c * q.c / (4.0 * q.b)};
    }
    detail::check_degenerate_linear(q.c, "c", tol);
    return {0.0, q.a};
}

/// Minimum of f(β, α) over the plane; non-negativity is a·b ≥ (s² + c²)/4.
inline PlaneMinimum minimize_alpha_beta(const QuadraticForm& q, const Tolerances& tol = {}) {
    if (q.b > tol.degenerate) {
        return {-q.s / (2.0 * q.b), -q.c / (2.0 * q.b),
                q.a - (q.s * q.s + q.c * q.c) / (4.0 * q.b)};
    }
    detail::check_degenerate_linear(q.c, "c", tol);
    detail::check_degenerate_linear(q.s, "s", tol);
    return {0.0, 0.0, q.a};
}

/// φ = ψ1 + (β + iα)ψ2. Orthogonal to ψ.
inline ComplexVector phi_vector(const HermitianMatrix& a, const HermitianMatrix& b,
                                const ComplexVector& psi, double beta, double alpha,
                                const Tolerances& tol = {}) {
    return deviation_vector(a, psi, tol) + deviation_vector(b, psi, tol).scaled({beta, alpha});
}

/// φ/‖φ‖. Used as ψ⊥ it turns the Schwarz step into an equality.
inline ComplexVector saturating_witness(const HermitianMatrix& a, const HermitianMatrix& b,
                                        const ComplexVector& psi, double beta, double alpha,
                                        const Tolerances& tol = {}) {
    ComplexVector phi = phi_vector(a, b, psi, beta, alpha, tol);
    double n = phi.norm();
    if (!(n > tol.null)) {
        throw NullPhiVector("phi vector vanishes at beta = " + std::to_string(beta) +
                            ", alpha = " + std::to_string(alpha));
    }
    return phi.scaled(1.0 / n);
}

enum class WitnessObjective { eq4_rhs, eq3_rhs, mp_rhs_plus, mp_rhs_minus };

inline std::optional<WitnessObjective> parse_objective(std::string_view name) {
    if (name == "eq4_rhs") return WitnessObjective::eq4_rhs;
    if (name == "eq3_rhs") return WitnessObjective::eq3_rhs;
    if (name == "mp_rhs" || name == "mp_rhs_plus") return WitnessObjective::mp_rhs_plus;
    if (name == "mp_rhs_minus") return WitnessObjective::mp_rhs_minus;
    return std::nullopt;
}

inline const char* objective_name(WitnessObjective o) {
    switch (o) {
        case WitnessObjective::eq4_rhs:
            return "eq4_rhs";
        case WitnessObjective::eq3_rhs:
            return "eq3_rhs";
        case WitnessObjective::mp_rhs_plus:
            return "mp_rhs_plus";
        case WitnessObjective::mp_rhs_minus:
            return "mp_rhs_minus";
    }
    return "?";
}

inline double objective_value(WitnessObjective o, const WitnessContext& ctx, const MomentSet& m,
                              const Tolerances& tol = {}) {
    switch (o) {
        case WitnessObjective::eq4_rhs:
            return eq4_sum(ctx, m, tol).rhs;
        case WitnessObjective::eq3_rhs:
            return eq3_product(ctx, m, tol).rhs;
        case WitnessObjective::mp_rhs_plus:
            return mp_sum_inequality(ctx, m, +1, tol).rhs;
        case WitnessObjective::mp_rhs_minus:
            return mp_sum_inequality(ctx, m, -1, tol).rhs;
    }
    return 0.0;
}

struct WitnessSearchOptions {
    WitnessObjective objective = WitnessObjective::eq4_rhs;
    int restarts = 8;
    int iters = 200;  ///< coordinate sweeps per restart
    RngSeed seed{};
    double initial_step = 0.5;
};

struct WitnessSearchResult {
    ComplexVector witness;
    double objective = 0.0;
    std::uint64_t evaluations = 0;
    RngSeed seed{};
};

/// Searches unit witnesses ψ⊥ = Σ_k w_k e_k over complement_basis(ψ) for the
/// largest objective. Each restart draws Haar coefficients from
/// derive_seed(seed, restart) and refines them by coordinate perturbation of
/// the real and imaginary parts with step halving, renormalizing after each
/// move and accepting only improvements.
inline WitnessSearchResult maximize_witness(const HermitianMatrix& a, const HermitianMatrix& b,
                                            const ComplexVector& psi,
                                            const WitnessSearchOptions& opts,
                                            const Tolerances& tol = {}) {
    if (opts.restarts < 1) {
        throw Error("maximize_witness requires restarts >= 1");
    }
    if (opts.iters < 0) {
        throw Error("maximize_witness requires iters >= 0");
    }
    const MomentSet m = moment_set(a, b, psi, tol);
    const auto basis = complement_basis(psi);
    const int n = static_cast<int>(basis.size());
    const int d = psi.dim();

    // Deviation vectors are fixed; only the overlaps with ψ⊥ change.
    const ComplexVector dev_a = deviation_vector(a, psi, tol);
    const ComplexVector dev_b = deviation_vector(b, psi, tol);
    std::uint64_t evaluations = 0;

    auto assemble = [&](const Eigen::VectorXcd& w) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
        for (int k = 0; k < n; ++k) v += w(k) * basis[k].values();
        return ComplexVector(std::move(v));
    };
    auto evaluate = [&](const Eigen::VectorXcd& w) {
        ++evaluations;
        WitnessContext ctx = detail::context_from_deviations(assemble(w), dev_a, dev_b, tol);
        return objective_value(opts.objective, ctx, m, tol);
    };

    Eigen::VectorXcd best_w;
    double best = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < opts.restarts; ++r) {
        std::mt19937_64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)).value);
        Eigen::VectorXcd w = detail::gaussian_unit(n, rng);
        double value = evaluate(w);
        double step = opts.initial_step;
        for (int it = 0; it < opts.iters && step > 1e-12; ++it) {
            bool improved = false;
            for (int k = 0; k < 2 * n; ++k) {
                for (double dir : {+1.0, -1.0}) {
                    Eigen::VectorXcd trial = w;
                    Complex delta = (k % 2 == 0) ? Complex(dir * step, 0.0) : Complex(0.0, dir * step);
                    trial(k / 2) += delta;
                    double tn = trial.norm();
                    if (!(tn > 0.0)) continue;
                    trial /= tn;
                    double tv = evaluate(trial);
                    if (tv > value) {
                        w = std::move(trial);
                        value = tv;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        if (value > best) {
            best = value;
            best_w = w;
        }
    }
    return WitnessSearchResult{assemble(best_w), best, evaluations, opts.seed};
}

}  // namespace ubound
