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

/// \file verify.hpp
/// \brief Randomized campaign checking that no relation is ever violated.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ubound/bounds.hpp"
#include "ubound/io.hpp"
#include "ubound/linalg.hpp"
#include "ubound/moments.hpp"

namespace ubound {

struct VerifyOptions {
    int dim = 3;
    std::uint64_t trials = 1000;
    RngSeed seed{42};
    int alphas_per_trial = 16;
    double alpha_range = 10.0;  ///< α drawn uniformly from [-alpha_range, alpha_range]
    Tolerances tol;
};

struct Violation {
    std::uint64_t trial = 0;
    RngSeed trial_seed{};
    std::string what;
    double value = 0.0;
    nlohmann::json instance;
};

struct VerifySummary {
    std::uint64_t trials = 0;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    double worst_gap = std::numeric_limits<double>::infinity();  ///< min over every report gap
    double worst_eq1 = std::numeric_limits<double>::infinity();  ///< min over eq1 samples
    std::optional<Violation> first_violation;
};

/// Everything a single trial draws. Trial t uses derive_seed(seed, t), so a
/// violation can be reproduced from its trial seed alone.
struct TrialInstance {
    HermitianMatrix A;
    HermitianMatrix B;
    ComplexVector state;
    ComplexVector witness;
    std::vector<double> alphas;
};

inline TrialInstance draw_trial(int dim, RngSeed trial_seed, int alphas, double alpha_range) {
    ComplexVector state = random_unit_vector(dim, derive_seed(trial_seed, 2));
    TrialInstance t{random_hermitian(dim, derive_seed(trial_seed, 0)),
                    random_hermitian(dim, derive_seed(trial_seed, 1)), state,
                    random_orthogonal_unit_vector(state, derive_seed(trial_seed, 3)),
                    {}};
    std::mt19937_64 rng(derive_seed(trial_seed, 4).value);
    std::uniform_real_distribution<double> uniform(-alpha_range, alpha_range);
    t.alphas.reserve(alphas);
    for (int k = 0; k < alphas; ++k) t.alphas.push_back(uniform(rng));
    return t;
}

inline VerifySummary run_verification(const VerifyOptions& opts) {
    if (opts.dim < 2) throw InputError("dim: must be at least 2");
    if (opts.trials < 1) throw InputError("trials: must be at least 1");
    if (opts.alphas_per_trial < 0) throw InputError("alphas-per-trial: must be nonnegative");

    const Tolerances& tol = opts.tol;
    VerifySummary summary;
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        const RngSeed trial_seed = derive_seed(opts.seed, t);
        TrialInstance inst =
            draw_trial(opts.dim, trial_seed, opts.alphas_per_trial, opts.alpha_range);
        auto check = [&](bool ok, const std::string& what, double value) {
            ++summary.checks;
            if (ok) return;
            ++summary.violations;
            if (!summary.first_violation) {
                summary.first_violation = Violation{
                    t, trial_seed, what, value,
                    instance_to_json(inst.A, inst.B, inst.state, inst.witness)};
            }
        };

        try {
            BoundReport report = bound_report(inst.A, inst.B, inst.state, inst.witness, tol);
            const MomentSet& m = report.moments;
            const double scale = 1.0 + std::abs(m.comm) + std::abs(m.overlap);
            check(std::abs(m.comm.real()) <= 1e-9 * (1.0 + std::abs(m.comm)),
                  "commutator expectation not imaginary", m.comm.real());
            check(std::abs(m.comm - (m.overlap - std::conj(m.overlap))) <= 1e-9 * scale,
                  "comm != overlap - conj(overlap)", std::abs(m.comm.imag()));
            check(std::abs(m.acov - 2.0 * m.overlap.real()) <= 1e-9 * scale,
                  "acov != overlap + conj(overlap)", m.acov);
            const double decomposed = 0.25 * std::norm(m.comm) + 0.25 * m.acov * m.acov;
            check(std::abs(std::norm(m.overlap) - decomposed) <=
                      1e-9 * std::max(1.0, std::norm(m.overlap)),
                  "|overlap|^2 != |comm|^2/4 + acov^2/4", std::norm(m.overlap));
            for (const auto& [name, r] : report.entries()) {
                summary.worst_gap = std::min(summary.worst_gap, r.gap);
                check(r.gap >= -tol.gap, std::string("negative gap in ") + name, r.gap);
            }
            for (double alpha : inst.alphas) {
                double v = eq1_value(*report.witness, m, alpha);
                summary.worst_eq1 = std::min(summary.worst_eq1, v);
                check(v >= -tol.gap, "eq1_value below zero at alpha = " + format_double(alpha), v);
            }
        } catch (const Error& e) {
            check(false, std::string("exception: ") + e.what(), 0.0);
        }
        ++summary.trials;
    }
    return summary;
}

}  // namespace ubound
