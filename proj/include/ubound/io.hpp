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

/// \file io.hpp
/// \brief Instance files, report serialization and scan CSV output.
///
/// Complex numbers are written as [re, im] pairs in JSON and as adjacent
/// `_re`/`_im` columns in CSV. Machine outputs carry 17 significant digits.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ubound/bounds.hpp"
#include "ubound/linalg.hpp"
#include "ubound/scenarios.hpp"

namespace ubound {

/// Malformed or inconsistent input (exit code 2 in the CLI).
class InputError : public Error {
   public:
    using Error::Error;
};

inline constexpr int kSchemaVersion = 1;

/// "%.{digits}g" in the C locale.
inline std::string format_double(double x, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

/// Command-line tolerance overrides; unset fields leave the value alone.
struct ToleranceOverrides {
    std::optional<double> herm;
    std::optional<double> orth;
    std::optional<double> norm;
    std::optional<double> gap;

    void apply(Tolerances& tol) const {
        if (herm) tol.herm = *herm;
        if (orth) tol.orth = *orth;
        if (norm) tol.norm = *norm;
        if (gap) tol.gap = *gap;
    }
};

struct Instance {
    ComplexVector state;
    HermitianMatrix A;
    HermitianMatrix B;
    std::optional<ComplexVector> witness;
    Tolerances tol;
};

namespace detail {

inline Complex parse_complex(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError(where + ": expected [re, im] pair of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Eigen::VectorXcd parse_vector(const nlohmann::json& j, int dim, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array");
    if (static_cast<int>(j.size()) != dim) {
        throw InputError(where + ": expected " + std::to_string(dim) + " entries, got " +
                         std::to_string(j.size()));
    }
    Eigen::VectorXcd v(dim);
    for (int k = 0; k < dim; ++k) {
        v(k) = parse_complex(j[k], where + "[" + std::to_string(k) + "]");
    }
    return v;
}

inline HermitianMatrix parse_matrix(const nlohmann::json& j, int dim, const std::string& name,
                                    double tol_herm) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        throw InputError(name + ": expected " + std::to_string(dim) + " rows");
    }
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        m.row(r) = parse_vector(j[r], dim, name + "[" + std::to_string(r) + "]").transpose();
    }
    double defect = hermiticity_defect(m);
    if (!(defect <= tol_herm)) {
        throw InputError(name + ": matrix is not Hermitian (max |M - M^dagger| = " +
                         format_double(defect, 6) + ")");
    }
    return HermitianMatrix(std::move(m), tol_herm);
}

inline void read_tolerance(const nlohmann::json& t, const char* key, double& target) {
    if (!t.contains(key)) return;
    if (!t[key].is_number() || !(t[key].get<double>() >= 0.0)) {
        throw InputError(std::string("tolerances.") + key + ": expected a nonnegative number");
    }
    target = t[key].get<double>();
}

inline nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline nlohmann::json vector_json(const ComplexVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (int k = 0; k < v.dim(); ++k) out.push_back(complex_json(v[k]));
    return out;
}

inline nlohmann::json matrix_json(const HermitianMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (int r = 0; r < m.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(complex_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace detail

/// Validates and builds an instance. Structural and Hermiticity problems
/// raise InputError; normalization and orthogonality raise NotNormalized and
/// NotOrthogonal. Tolerance precedence: defaults, then the file's
/// "tolerances" object, then `overrides`.
inline Instance parse_instance(const nlohmann::json& j, const ToleranceOverrides& overrides = {}) {
    if (!j.is_object()) throw InputError("instance: expected a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer()) {
        throw InputError("dimension: expected an integer");
    }
    const int dim = j["dimension"].get<int>();
    if (dim < 2) throw InputError("dimension: must be at least 2");
    for (const char* key : {"state", "A", "B"}) {
        if (!j.contains(key)) throw InputError(std::string(key) + ": missing field");
    }

    Tolerances tol;
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (!t.is_object()) throw InputError("tolerances: expected an object");
        detail::read_tolerance(t, "herm", tol.herm);
        detail::read_tolerance(t, "orth", tol.orth);
        detail::read_tolerance(t, "norm", tol.norm);
        detail::read_tolerance(t, "gap", tol.gap);
    }
    overrides.apply(tol);

    ComplexVector state(detail::parse_vector(j["state"], dim, "state"));
    HermitianMatrix a = detail::parse_matrix(j["A"], dim, "A", tol.herm);
    HermitianMatrix b = detail::parse_matrix(j["B"], dim, "B", tol.herm);
    std::optional<ComplexVector> witness;
    if (j.contains("witness") && !j["witness"].is_null()) {
        witness = ComplexVector(detail::parse_vector(j["witness"], dim, "witness"));
    }

    require_normalized(state, tol.norm, "state");
    if (witness) {
        require_normalized(*witness, tol.norm, "witness");
        double ov = std::abs(inner(state, *witness));
        if (!(ov <= tol.orth)) {
            throw NotOrthogonal("witness is not orthogonal to state (|<psi|witness>| = " +
                                format_double(ov, 6) + ")");
        }
    }
    return Instance{std::move(state), std::move(a), std::move(b), std::move(witness), tol};
}

inline Instance load_instance(const std::string& path, const ToleranceOverrides& overrides = {}) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse_instance(j, overrides);
}

inline nlohmann::json instance_to_json(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const ComplexVector& state,
                                       const std::optional<ComplexVector>& witness) {
    nlohmann::json j;
    j["dimension"] = state.dim();
    j["state"] = detail::vector_json(state);
    j["A"] = detail::matrix_json(a);
    j["B"] = detail::matrix_json(b);
    if (witness) j["witness"] = detail::vector_json(*witness);
    return j;
}

inline nlohmann::json inequality_to_json(const InequalityResult& r) {
    return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"gap", r.gap}, {"trivial", r.trivial}};
}

inline nlohmann::json report_to_json(const BoundReport& report) {
    const MomentSet& m = report.moments;
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["moments"] = {{"meanA", m.meanA},
                    {"meanB", m.meanB},
                    {"varA", m.varA},
                    {"varB", m.varB},
                    {"overlap", detail::complex_json(m.overlap)},
                    {"comm", detail::complex_json(m.comm)},
                    {"acov", m.acov}};
    if (report.witness) {
        const WitnessContext& w = *report.witness;
        j["witness"] = {{"overlap1", detail::complex_json(w.overlap1)},
                        {"overlap2", detail::complex_json(w.overlap2)},
                        {"cross", detail::complex_json(w.cross)},
                        {"deficitA", w.deficitA},
                        {"deficitB", w.deficitB}};
    }
    nlohmann::json ineq = nlohmann::json::object();
    for (const auto& [name, r] : report.entries()) ineq[name] = inequality_to_json(r);
    j["inequalities"] = std::move(ineq);
    return j;
}

inline BoundReport report_from_json(const nlohmann::json& j) {
    try {
        BoundReport report;
        const auto& m = j.at("moments");
        report.moments.meanA = m.at("meanA").get<double>();
        report.moments.meanB = m.at("meanB").get<double>();
        report.moments.varA = m.at("varA").get<double>();
        report.moments.varB = m.at("varB").get<double>();
        report.moments.overlap = detail::parse_complex(m.at("overlap"), "moments.overlap");
        report.moments.comm = detail::parse_complex(m.at("comm"), "moments.comm");
        report.moments.acov = m.at("acov").get<double>();
        if (j.contains("witness")) {
            const auto& w = j.at("witness");
            WitnessContext ctx;
            ctx.overlap1 = detail::parse_complex(w.at("overlap1"), "witness.overlap1");
            ctx.overlap2 = detail::parse_complex(w.at("overlap2"), "witness.overlap2");
            ctx.cross = detail::parse_complex(w.at("cross"), "witness.cross");
            ctx.deficitA = w.at("deficitA").get<double>();
            ctx.deficitB = w.at("deficitB").get<double>();
            report.witness = ctx;
        }
        const auto& ineq = j.at("inequalities");
        auto read = [&](const char* name) -> std::optional<InequalityResult> {
            if (!ineq.contains(name)) return std::nullopt;
            const auto& r = ineq.at(name);
            return InequalityResult{r.at("lhs").get<double>(), r.at("rhs").get<double>(),
                                    r.at("gap").get<double>(), r.at("trivial").get<bool>()};
        };
        report.robertson = read("robertson").value();
        report.schrodinger = read("schrodinger").value();
        report.eq2 = read("eq2");
        report.eq3 = read("eq3");
        report.eq4 = read("eq4");
        report.mp_plus = read("mp_plus");
        report.mp_minus = read("mp_minus");
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("report: ") + e.what());
    } catch (const std::bad_optional_access&) {
        throw InputError("report: missing robertson or schrodinger entry");
    }
}

/// Human-readable report, 6 significant digits.
inline void write_report_table(std::ostream& out, const BoundReport& report) {
    const MomentSet& m = report.moments;
    auto c = [](Complex z) {
        return "(" + format_double(z.real(), 6) + ", " + format_double(z.imag(), 6) + ")";
    };
    out << "moments\n"
        << "  <A> = " << format_double(m.meanA, 6) << "   <B> = " << format_double(m.meanB, 6)
        << "\n"
        << "  varA = " << format_double(m.varA, 6) << "   varB = " << format_double(m.varB, 6)
        << "\n"
        << "  <psi1|psi2> = " << c(m.overlap) << "   <[A,B]> = " << c(m.comm)
        << "   acov = " << format_double(m.acov, 6) << "\n";
    if (report.witness) {
        const WitnessContext& w = *report.witness;
        out << "witness\n"
            << "  <w|psi1> = " << c(w.overlap1) << "   <w|psi2> = " << c(w.overlap2)
            << "   cross = " << c(w.cross) << "\n"
            << "  deficitA = " << format_double(w.deficitA, 6)
            << "   deficitB = " << format_double(w.deficitB, 6) << "\n";
    }
    out << std::left << std::setw(12) << "relation" << std::setw(14) << "lhs" << std::setw(14)
        << "rhs" << std::setw(14) << "gap"
        << "trivial\n";
    for (const auto& [name, r] : report.entries()) {
        out << std::setw(12) << name << std::setw(14) << format_double(r.lhs, 6) << std::setw(14)
            << format_double(r.rhs, 6) << std::setw(14) << format_double(r.gap, 6)
            << (r.trivial ? "yes" : "no") << "\n";
    }
}

struct ScanRow {
    double theta = 0.0;
    BoundReport report;
};

/// Relation columns of the scan CSV, in order. Each expands to
/// `<name>_lhs,<name>_rhs,<name>_gap,<name>_trivial`.
inline constexpr const char* kScanRelations[] = {"robertson", "schrodinger", "eq2",     "eq3",
                                                 "eq4",       "mp_plus",     "mp_minus"};

/// Evenly spaced θ grid over [theta_min, theta_max], endpoints included.
inline std::vector<ScanRow> scan_spin1(double theta_min, double theta_max, int steps,
                                       const Tolerances& tol = {}) {
    if (steps < 2) throw InputError("steps: must be at least 2");
    if (!std::isfinite(theta_min) || !std::isfinite(theta_max) || !(theta_max > theta_min)) {
        throw InputError("theta range: need finite theta-min < theta-max");
    }
    std::vector<ScanRow> rows;
    rows.reserve(steps);
    const double h = (theta_max - theta_min) / (steps - 1);
    for (int k = 0; k < steps; ++k) {
        double theta = (k == steps - 1) ? theta_max : theta_min + k * h;
        Spin1Instance inst = spin1_instance(theta);
        rows.push_back({theta, bound_report(inst.A, inst.B, inst.state, inst.witness, tol)});
    }
    return rows;
}

inline void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << "# schema=" << kSchemaVersion << "\n";
    out << "theta";
    for (const char* name : kScanRelations) {
        for (const char* col : {"lhs", "rhs", "gap", "trivial"}) out << "," << name << "_" << col;
    }
    out << "\n";
    for (const ScanRow& row : rows) {
        out << format_double(row.theta);
        const auto entries = row.report.entries();
        for (const char* name : kScanRelations) {
            auto it = std::find_if(entries.begin(), entries.end(),
                                   [&](const auto& e) { return std::string_view(e.first) == name; });
            if (it == entries.end()) {
                out << ",,,,";
                continue;
            }
            const InequalityResult& r = it->second;
            out << "," << format_double(r.lhs) << "," << format_double(r.rhs) << ","
                << format_double(r.gap) << "," << (r.trivial ? 1 : 0);
        }
        out << "\n";
    }
}

}  // namespace ubound
