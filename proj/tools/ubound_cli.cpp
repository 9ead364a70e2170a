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

// ubound: evaluate, scan, verify and optimize witness-state uncertainty
// relations.
//
// Exit codes: 0 ok, 1 verification violation, 2 input error,
// 3 normalization/orthogonality constraint violation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ubound/ubound.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitConstraint = 3;

struct TolFlags {
    std::optional<double> all;
    std::optional<double> herm;
    std::optional<double> orth;
    std::optional<double> norm;
    std::optional<double> gap;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", all, "Joint override for tol_orth, tol_norm and tol_gap");
        cmd->add_option("--tol-herm", herm, "Hermiticity tolerance");
        cmd->add_option("--tol-orth", orth, "Orthogonality tolerance");
        cmd->add_option("--tol-norm", norm, "Normalization tolerance");
        cmd->add_option("--tol-gap", gap, "Most negative gap accepted");
    }

    /// Granular flags win over --tol.
    ubound::ToleranceOverrides overrides() const {
        ubound::ToleranceOverrides o;
        o.orth = orth ? orth : all;
        o.norm = norm ? norm : all;
        o.gap = gap ? gap : all;
        o.herm = herm;
        return o;
    }
};

/// Writes to `path`, or stdout when empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ubound::InputError(path + ": cannot open for writing");
    fn(out);
}

int cmd_report(const std::string& input, bool json, const TolFlags& flags) {
    ubound::Instance inst = ubound::load_instance(input, flags.overrides());
    ubound::BoundReport report =
        ubound::bound_report(inst.A, inst.B, inst.state, inst.witness, inst.tol);
    if (json) {
        std::cout << ubound::report_to_json(report).dump(2) << "\n";
    } else {
        ubound::write_report_table(std::cout, report);
    }
    return kExitOk;
}

int cmd_scan(const std::string& family, double theta_min, double theta_max, int steps,
             const std::string& output) {
    if (family != "spin1") throw ubound::InputError("family: only 'spin1' is supported");
    auto rows = ubound::scan_spin1(theta_min, theta_max, steps);
    with_output(output, [&](std::ostream& out) { ubound::write_scan_csv(out, rows); });
    return kExitOk;
}

int cmd_verify(const ubound::VerifyOptions& opts) {
    ubound::VerifySummary s = ubound::run_verification(opts);
    std::cout << "dim " << opts.dim << "\n"
              << "trials " << s.trials << "\n"
              << "checks " << s.checks << "\n"
              << "violations " << s.violations << "\n"
              << "worst_gap " << ubound::format_double(s.worst_gap) << "\n"
              << "worst_eq1 " << ubound::format_double(s.worst_eq1) << "\n";
    if (s.first_violation) {
        const auto& v = *s.first_violation;
        std::cerr << "violation at trial " << v.trial << " (trial seed " << v.trial_seed.value
                  << "): " << v.what << " value " << ubound::format_double(v.value) << "\n"
                  << v.instance.dump() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_optimize(const std::string& input, const std::string& objective, int restarts,
                 int iters, std::uint64_t seed, const std::string& output) {
    auto obj = ubound::parse_objective(objective);
    if (!obj) {
        throw ubound::InputError("objective: unknown name '" + objective +
                                 "' (expected eq4_rhs, eq3_rhs, mp_rhs, mp_rhs_plus or "
                                 "mp_rhs_minus)");
    }
    if (restarts < 1) throw ubound::InputError("restarts: must be at least 1");
    if (iters < 0) throw ubound::InputError("iters: must be nonnegative");
    ubound::Instance inst = ubound::load_instance(input);
    if (inst.witness) {
        throw ubound::InputError("witness: optimize expects an instance without a fixed witness");
    }
    ubound::WitnessSearchOptions opts;
    opts.objective = *obj;
    opts.restarts = restarts;
    opts.iters = iters;
    opts.seed = ubound::RngSeed{seed};
    ubound::WitnessSearchResult result =
        ubound::maximize_witness(inst.A, inst.B, inst.state, opts, inst.tol);
    ubound::BoundReport report =
        ubound::bound_report(inst.A, inst.B, inst.state, result.witness, inst.tol);

    nlohmann::json j;
    j["schema"] = ubound::kSchemaVersion;
    j["objective_name"] = ubound::objective_name(*obj);
    j["objective"] = result.objective;
    j["evaluations"] = result.evaluations;
    j["seed"] = result.seed.value;
    j["witness"] = ubound::detail::vector_json(result.witness);
    j["report"] = ubound::report_to_json(report);
    with_output(output, [&](std::ostream& out) { out << j.dump(2) << "\n"; });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Witness-state uncertainty relations: reports, scans, verification, search"};
    app.require_subcommand(1);

    // report
    auto* report = app.add_subcommand("report", "Evaluate every relation for an instance file");
    std::string report_input;
    bool report_json = false;
    bool report_table = false;
    TolFlags report_tol;
    report->add_option("input", report_input, "Instance JSON file")->required();
    auto* json_flag = report->add_flag("--json", report_json, "Machine-readable JSON output");
    report->add_flag("--table", report_table, "Human-readable table (default)")
        ->excludes(json_flag);
    report_tol.attach(report);

    // scan
    auto* scan = app.add_subcommand("scan", "Sweep the spin-1 family over a theta grid");
    std::string family = "spin1";
    double theta_min = 0.0;
    double theta_max = std::numbers::pi;
    int steps = 181;
    std::string scan_output;
    scan->add_option("--family", family, "Instance family")->capture_default_str();
    scan->add_option("--theta-min", theta_min, "First grid point (radians)")
        ->capture_default_str();
    scan->add_option("--theta-max", theta_max, "Last grid point (radians)")
        ->capture_default_str();
    scan->add_option("--steps", steps, "Number of grid points (>= 2)")->capture_default_str();
    scan->add_option("--output", scan_output, "CSV path (stdout when omitted)");

    // verify
    auto* verify = app.add_subcommand("verify", "Randomized check of every relation");
    ubound::VerifyOptions verify_opts;
    std::uint64_t verify_seed = 42;
    verify->add_option("--dim", verify_opts.dim, "Hilbert space dimension")
        ->capture_default_str();
    verify->add_option("--trials", verify_opts.trials, "Number of random instances")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "Campaign seed")->capture_default_str();
    verify->add_option("--alphas-per-trial", verify_opts.alphas_per_trial,
                       "Alpha samples per instance")
        ->capture_default_str();

    // optimize
    auto* optimize = app.add_subcommand("optimize", "Search the witness maximizing a bound");
    std::string opt_input;
    std::string objective = "eq4_rhs";
    int restarts = 8;
    int iters = 200;
    std::uint64_t opt_seed = 0;
    std::string opt_output;
    optimize->add_option("--input", opt_input, "Instance JSON file (no witness)")->required();
    optimize->add_option("--objective", objective,
                         "eq4_rhs | eq3_rhs | mp_rhs | mp_rhs_plus | mp_rhs_minus")
        ->capture_default_str();
    optimize->add_option("--restarts", restarts, "Random restarts")->capture_default_str();
    optimize->add_option("--iters", iters, "Refinement sweeps per restart")
        ->capture_default_str();
    optimize->add_option("--seed", opt_seed, "Search seed")->capture_default_str();
    optimize->add_option("--output", opt_output, "JSON path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*report) return cmd_report(report_input, report_json, report_tol);
        if (*scan) return cmd_scan(family, theta_min, theta_max, steps, scan_output);
        if (*verify) {
            verify_opts.seed = ubound::RngSeed{verify_seed};
            return cmd_verify(verify_opts);
        }
        if (*optimize) {
            return cmd_optimize(opt_input, objective, restarts, iters, opt_seed, opt_output);
        }
    } catch (const ubound::NotNormalized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const ubound::NotOrthogonal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const ubound::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
